// SPDX-License-Identifier: Apache-2.0
#include "nomaftr/analysis_gpa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nomaftr/error.hpp"
#include "nomaftr/quadrature.hpp"
#include "nomaftr/specfun.hpp"

namespace nomaftr {

double GpaScenario::alpha() const
{
    return 1 / (user_p.params().two_sigma_sq() * budget.gamma_bar * budget.q_p);
}

double GpaScenario::beta() const
{
    return 1 / (user_q.params().two_sigma_sq() * budget.gamma_bar * budget.q_q);
}

void GpaScenario::validate() const
{
    budget.validate();
    gpa.validate();
    if (user_p.n_terms() == 0 || user_q.n_terms() == 0)
        throw DomainError("GpaScenario: both users need a series");
}

namespace gpa {
namespace {

void check_threshold(double gamma_th)
{
    if (!(gamma_th > 0))
        throw DomainError("gamma_th must be positive");
}

// m^m d_0 / Gamma(m), the small-argument slope of cdf times 2 sigma^2
double origin_slope(const FtrSeries& series)
{
    const double m = series.params().m;
    return std::exp(m * std::log(m) + std::log(series.d()[0]) - specfun::ln_gamma(m));
}

}  // namespace

double op_p(double gamma_th, const GpaScenario& s)
{
    check_threshold(gamma_th);
    return ftr::cdf(gamma_th / (s.gpa.a * s.budget.gamma_bar * s.budget.q_p), s.user_p);
}

double op_q(double gamma_th, const GpaScenario& s)
{
    check_threshold(gamma_th);
    const double a_th = s.gpa.a_th(gamma_th);
    if (a_th <= 0)
        return 1;
    return ftr::cdf(gamma_th / (a_th * s.budget.gamma_bar * s.budget.q_q), s.user_q);
}

double op_p_asymptotic(double gamma_th, const GpaScenario& s)
{
    check_threshold(gamma_th);
    return origin_slope(s.user_p) * gamma_th * s.alpha() / s.gpa.a;
}

double op_q_asymptotic(double gamma_th, const GpaScenario& s)
{
    check_threshold(gamma_th);
    const double a_th = s.gpa.a_th(gamma_th);
    if (a_th <= 0)
        return 1;
    return origin_slope(s.user_q) * gamma_th * s.beta() / a_th;
}

double ec_lambda(double b, const FtrSeries& series)
{
    if (!(b > 0))
        throw DomainError("ec_lambda: b must be positive");
    const double y = b * series.params().two_sigma_sq();
    const auto& h = series.h_coeff();
    double sum = 0;
    for (int j = series.n_terms(); j-- > 0;)
        if (h[j] != 0)
            sum += h[j] * specfun::gamma_mean_log1p(j, y);
    return sum / std::numbers::ln2;
}

double ec_lambda_quadrature(double b, const FtrSeries& series)
{
    if (!(b > 0))
        throw DomainError("ec_lambda_quadrature: b must be positive");
    auto integrand = [&](double x) { return std::log2(1 + b * x) * ftr::pdf(x, series); };
    return quad::integrate_to_infinity(integrand, 0, {0.0, 1e-11, 2'000'000}).value;
}

double ec(const GpaScenario& s)
{
    const double g = s.budget.gamma_bar;
    const double a = s.gpa.a;
    // log2(1 + gamma_q) = log2(1 + x_q) - log2(1 + a x_q)
    const double value = ec_lambda(a * g * s.budget.q_p, s.user_p) +
                         ec_lambda(g * s.budget.q_q, s.user_q) -
                         ec_lambda(a * g * s.budget.q_q, s.user_q);
    return std::max(0.0, value);
}

}  // namespace gpa
}  // namespace nomaftr
