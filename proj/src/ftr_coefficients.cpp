// SPDX-License-Identifier: Apache-2.0
// Legendre double sum for the FTR mixture coefficients, in extended precision.
#include "nomaftr/detail/ftr_coefficients.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "nomaftr/detail/legendre.hpp"
#include "nomaftr/error.hpp"
#include "nomaftr/specfun.hpp"

namespace nomaftr::ftr::detail {
namespace {

using Real50 = boost::multiprecision::cpp_bin_float_50;
using Real100 = boost::multiprecision::cpp_bin_float_100;

template<class Real>
CoefficientTerm evaluate(int j, const FtrParams& params)
{
    const Real m = params.m;
    const Real k = params.k;
    const Real delta = params.delta;
    const Real s = sqrt((m + k) * (m + k) - (k * delta) * (k * delta));
    const Real z = (m + k) / s;
    const Real nu = Real(j) + m - 1;
    const Real tol = std::numeric_limits<Real>::epsilon() * 1000;
    const Real half_delta = delta / 2;

    // g[n] = Gamma(nu+1+n) P^{-n}_nu(z) / Gamma(nu+1); equals the positive-order
    // product Gamma(nu+1-n) P^{n}_nu(z) / Gamma(nu+1), so only |2l-k| matters
    std::vector<Real> g(j + 1);
    Real rising = 1;
    for (int n = 0; n <= j; ++n) {
        if (n > 0)
            rising *= nu + n;
        g[n] = rising * specfun::detail::legendre_negative_order<Real>(nu, n, z, tol);
    }

    // phase e^{i pi (2l-k)} = (-1)^k
    Real value = 0;
    Real magnitude = 0;
    Real binom_jk = 1;
    Real power = 1;
    for (int kk = 0; kk <= j; ++kk) {
        if (kk > 0) {
            binom_jk = binom_jk * (j - kk + 1) / kk;
            power *= half_delta;
        }
        if (power == 0)
            break;
        Real inner = 0;
        Real binom_kl = 1;
        for (int l = 0; l <= kk; ++l) {
            if (l > 0)
                binom_kl = binom_kl * (kk - l + 1) / l;
            inner += binom_kl * g[std::abs(2 * l - kk)];
        }
        const Real weight = binom_jk * power * inner;
        value += (kk % 2 == 0) ? weight : Real(-weight);
        magnitude += weight;
    }
    if (!(value > 0))
        return {0, std::numeric_limits<double>::infinity()};

    const double ln_value = static_cast<double>(log(value));
    const double ln_s = static_cast<double>(log(s));
    const double nu_d = static_cast<double>(nu);
    CoefficientTerm out;
    out.ln_d = specfun::ln_gamma(nu_d + 1) - (nu_d + 1) * ln_s + ln_value;
    // rounding in the alternating sum scales with its absolute sum
    const double eps = static_cast<double>(std::numeric_limits<Real>::epsilon());
    out.relative_error = static_cast<double>(magnitude / value) * eps * 4 * (j + 1);
    return out;
}

}  // namespace

CoefficientTerm ln_coefficient(int j, const FtrParams& params)
{
    if (j < 0)
        throw DomainError("coeff_d: index must be non-negative");
    // 50 digits suffice unless the alternating sum cancels most of them
    auto term = evaluate<Real50>(j, params);
    if (term.relative_error > 1e-18)
        term = evaluate<Real100>(j, params);
    if (!std::isfinite(term.relative_error))
        throw ConvergenceError("coeff_d: non-positive coefficient at j = " + std::to_string(j) +
                               " (cancellation exceeded working precision)");
    return term;
}

}  // namespace nomaftr::ftr::detail
