// SPDX-License-Identifier: Apache-2.0
#include "nomaftr/analysis_opa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "nomaftr/error.hpp"
#include "nomaftr/quadrature.hpp"
#include "nomaftr/specfun.hpp"

namespace nomaftr {

double OpaScenario::alpha() const
{
    return 1 / (user_p.params().two_sigma_sq() * budget.gamma_bar * budget.q_p);
}

double OpaScenario::beta() const
{
    return 1 / (user_q.params().two_sigma_sq() * budget.gamma_bar * budget.q_q);
}

void OpaScenario::validate() const
{
    budget.validate();
    if (user_p.n_terms() == 0 || user_q.n_terms() == 0)
        throw DomainError("OpaScenario: both users need a series");
    if (quad_op_nodes < 8 || quad_ec_nodes < 8)
        throw DomainError("OpaScenario: quadrature node counts must be at least 8");
}

namespace opa {
namespace {

void check_threshold(double gamma_th)
{
    if (!(gamma_th > 0))
        throw DomainError("gamma_th must be positive");
}

double log_add(double a, double b)
{
    if (a < b)
        std::swap(a, b);
    if (b == -std::numeric_limits<double>::infinity())
        return a;
    return a + std::log1p(std::exp(b - a));
}

// ln C(n, k)
double ln_binomial(int n, int k)
{
    return specfun::ln_factorial(n) - specfun::ln_factorial(k) - specfun::ln_factorial(n - k);
}

// ln of q^s/s! sum_{j >= s} H_p[j]; -inf where the tail vanishes
std::vector<double> ln_poisson_tail_weights(double q, const FtrSeries& series)
{
    const auto& h = series.h_coeff();
    const int n = series.n_terms();
    std::vector<double> out(n, -std::numeric_limits<double>::infinity());
    double tail = 0;
    const double ln_q = std::log(q);
    for (int s = n - 1; s >= 0; --s) {
        tail += h[s];
        if (tail > 0)
            out[s] = s * ln_q - specfun::ln_factorial(s) + std::log(tail);
    }
    return out;
}

// 1 - OP_p = 2 e^{-2q} sum_jq H_q beta^{jq+1}/jq! sum_s A_s
//            sum_m C(s+jq, m) 2^{s+jq-m} [J(jq+m+1) + J(jq+m)]
double op_p_shifted(double q, const OpaScenario& s)
{
    const double beta = s.beta();
    const int n_p = s.user_p.n_terms();
    const int n_q = s.user_q.n_terms();
    const auto ln_a = ln_poisson_tail_weights(q, s.user_p);
    const int max_order = 2 * (n_q - 1) + (n_p - 1) + 1;
    const auto ln_j = specfun::ln_gaussian_integrals(q + 2 * beta, beta, max_order);
    std::vector<double> ln_jj(max_order);
    for (int v = 0; v < max_order; ++v)
        ln_jj[v] = log_add(ln_j[v + 1], ln_j[v]);

    const double ln_beta = std::log(beta);
    const auto& h_q = s.user_q.h_coeff();
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(n_p) * n_q);
    std::vector<double> inner;
    for (int jq = 0; jq < n_q; ++jq) {
        if (h_q[jq] <= 0)
            continue;
        const double ln_outer = std::numbers::ln2 - 2 * q + std::log(h_q[jq]) +
                                (jq + 1) * ln_beta - specfun::ln_factorial(jq);
        for (int sp = 0; sp < n_p; ++sp) {
            if (!std::isfinite(ln_a[sp]))
                continue;
            const int top = sp + jq;
            inner.resize(top + 1);
            double peak = -std::numeric_limits<double>::infinity();
            for (int m = 0; m <= top; ++m) {
                inner[m] = ln_binomial(top, m) + (top - m) * std::numbers::ln2 + ln_jj[jq + m];
                peak = std::max(peak, inner[m]);
            }
            double acc = 0;
            for (double v : inner)
                acc += std::exp(v - peak);
            terms.push_back(ln_outer + ln_a[sp] + peak + std::log(acc));
        }
    }
    if (terms.empty())
        return std::clamp(s.user_p.normalization(), 0.0, 1.0);
    const double peak = *std::max_element(terms.begin(), terms.end());
    double acc = 0;
    for (double v : terms)
        acc += std::exp(v - peak);
    // the far-user expectation is taken over the renormalized truncated mixture
    const double survival = std::exp(peak) * acc / s.user_q.normalization();
    return std::clamp(s.user_p.normalization() - survival, 0.0, 1.0);
}

struct LiteralResult {
    double value;
    double error;  // absolute rounding error estimate
};

// The alternating expansion about z = 0 with I5 = I6 - I7, I7 by Chebyshev-Gauss.
LiteralResult op_p_literal_fixed(double q, const OpaScenario& s, int nodes)
{
    using Real = long double;
    const double beta = s.beta();
    const int n_p = s.user_p.n_terms();
    const int n_q = s.user_q.n_terms();
    const int max_l = (n_p - 1) + (n_q - 1);
    const int max_order = max_l + (n_q - 1) + 1;

    // I6 through the parabolic-cylinder identity
    const auto ln_i6 = specfun::ln_gaussian_integrals(q, beta, max_order);
    const auto rule = quad::chebyshev_gauss_rule(nodes);
    std::vector<Real> i5(max_order + 1), i5_mag(max_order + 1);
    for (int v = 0; v <= max_order; ++v) {
        Real i7 = 0;
        for (int k = 0; k < nodes; ++k) {
            const Real phi = rule.nodes[k];
            i7 += Real(rule.weights[k]) * std::sqrt(1 - phi * phi) *
                  std::exp(-(Real(q) + beta) * phi / 2 - Real(beta) / 4 * phi * phi +
                           v * std::log1p(phi));
        }
        i7 *= std::exp(-(v + 1) * std::log(Real(2)) - Real(q) / 2 - Real(beta) / 4);
        const Real i6 = std::exp(Real(ln_i6[v]));
        i5[v] = i6 - i7;
        i5_mag[v] = i6 + i7;
    }

    // binomial rows in long double
    std::vector<std::vector<Real>> binom(max_l + 1);
    for (int r = 0; r <= max_l; ++r) {
        binom[r].assign(r + 1, 1);
        for (int c = 1; c < r; ++c)
            binom[r][c] = binom[r - 1][c - 1] + binom[r - 1][c];
    }

    // c_L(k) = sum_m C(L, m) I5(m + k)
    std::vector<std::vector<Real>> c(max_l + 1), c_mag(max_l + 1);
    for (int l = 0; l <= max_l; ++l) {
        c[l].assign(n_q + 1, 0);
        c_mag[l].assign(n_q + 1, 0);
        for (int k = 1; k <= n_q; ++k)
            for (int m = 0; m <= l; ++m) {
                c[l][k] += binom[l][m] * i5[m + k];
                c_mag[l][k] += binom[l][m] * i5_mag[m + k];
            }
    }

    const auto& h_p = s.user_p.h_coeff();
    const auto& h_q = s.user_q.h_coeff();
    std::vector<Real> a(n_p);
    Real tail = 0;
    for (int np = n_p - 1; np >= 0; --np) {
        tail += h_p[np];
        a[np] = std::exp(np * std::log(Real(q)) - specfun::ln_factorial(np)) * tail;
    }
    Real sum = 0, mag = 0;
    for (int jq = 0; jq < n_q; ++jq) {
        if (h_q[jq] == 0)
            continue;
        const Real outer =
            h_q[jq] * std::exp((jq + 1) * std::log(Real(beta)) - specfun::ln_factorial(jq));
        for (int np = 0; np < n_p; ++np) {
            const int l = np + jq;
            Real b = 0, b_mag = 0;
            for (int nn = 0; nn <= jq; ++nn) {
                const Real w = binom[jq][nn];
                b += ((jq - nn) % 2 == 0 ? w : -w) * c[l][nn + 1];
                b_mag += w * c_mag[l][nn + 1];
            }
            sum += outer * a[np] * b;
            mag += outer * a[np] * b_mag;
        }
    }
    const Real pre = 2 * std::exp(Real(beta) - q);
    const double survival = static_cast<double>(pre * sum) / s.user_q.normalization();
    const double error = static_cast<double>(pre * mag) *
                         std::numeric_limits<Real>::epsilon() * 8 * (max_order + nodes);
    return {s.user_p.normalization() - survival, error};
}

double op_p_literal(double q, const OpaScenario& s)
{
    int nodes = s.quad_op_nodes;
    auto current = op_p_literal_fixed(q, s, nodes);
    while (true) {
        if (!(current.error <= 1e-8))
            throw ConvergenceError("op_p literal form: cancellation error estimate " +
                                   std::to_string(current.error) +
                                   " exceeds 1e-8; use the shifted form");
        if (nodes * 2 > kMaxNodes)
            throw ConvergenceError("op_p literal form: Chebyshev-Gauss nodes did not settle");
        const auto next = op_p_literal_fixed(q, s, nodes * 2);
        const bool settled = std::abs(next.value - current.value) <= kNodeStability;
        nodes *= 2;
        current = next;
        if (settled)
            break;
    }
    if (!(current.error <= 1e-8))
        throw ConvergenceError("op_p literal form: cancellation error estimate exceeds 1e-8");
    return std::clamp(current.value, 0.0, 1.0);
}

// m^m d_0 / Gamma(m)
double origin_slope(const FtrSeries& series)
{
    const double m = series.params().m;
    return std::exp(m * std::log(m) + std::log(series.d()[0]) - specfun::ln_gamma(m));
}

}  // namespace

double op_p(double gamma_th, const OpaScenario& s)
{
    check_threshold(gamma_th);
    s.validate();
    const double q = s.alpha() * gamma_th;
    return s.outage_form == OpaOutageForm::shifted ? op_p_shifted(q, s) : op_p_literal(q, s);
}

double op_p_given(double gamma_th, double h_q, const OpaScenario& s)
{
    check_threshold(gamma_th);
    if (!(h_q >= 0))
        throw DomainError("op_p_given: h_q must be non-negative");
    const auto& b = s.budget;
    const double root = std::sqrt(1 + b.gamma_bar * b.q_q * h_q);
    return ftr::cdf(gamma_th * (root + 1) / (b.gamma_bar * b.q_p), s.user_p);
}

double op_p_quadrature(double gamma_th, const OpaScenario& s)
{
    check_threshold(gamma_th);
    const double scale = s.user_q.params().two_sigma_sq();
    const auto& h_q = s.user_q.h_coeff();
    double sum = 0;
    // f_q is a gamma mixture: integrate each component separately
    for (int j = s.user_q.n_terms(); j-- > 0;) {
        if (h_q[j] == 0)
            continue;
        auto g = [&](double u) { return op_p_given(gamma_th, scale * u, s); };
        sum += h_q[j] * quad::gamma_expectation(g, j + 1.0, {0.0, 1e-12, 2'000'000});
    }
    return std::clamp(sum / s.user_q.normalization(), 0.0, 1.0);
}

double op_q(double gamma_th, const OpaScenario& s)
{
    check_threshold(gamma_th);
    const double x = (gamma_th * gamma_th + 2 * gamma_th) / (s.budget.gamma_bar * s.budget.q_q);
    return ftr::cdf(x, s.user_q);
}

double op_p_asymptotic(double gamma_th, const OpaScenario& s)
{
    check_threshold(gamma_th);
    const auto& pp = s.user_p.params();
    const auto& pq = s.user_q.params();
    const auto& h_q = s.user_q.h_coeff();
    // (2j+1)!! / (2^{j+1} j!) = Gamma(j + 3/2) / (sqrt(pi) j!)
    double sum = 0;
    for (int j = s.user_q.n_terms(); j-- > 0;)
        if (h_q[j] != 0)
            sum += h_q[j] * std::exp(specfun::ln_gamma(j + 1.5) - specfun::ln_factorial(j) -
                                     0.5 * std::log(std::numbers::pi));
    const double sq = pq.sigma * pq.sigma;
    const double sp = pp.sigma * pp.sigma;
    return origin_slope(s.user_p) * gamma_th * std::sqrt(sq * s.budget.q_q * std::numbers::pi) /
           (sp * s.budget.q_p * std::numbers::sqrt2) * sum / std::sqrt(s.budget.gamma_bar);
}

double op_q_asymptotic(double gamma_th, const OpaScenario& s)
{
    check_threshold(gamma_th);
    const auto& pq = s.user_q.params();
    return origin_slope(s.user_q) * (gamma_th * gamma_th + 2 * gamma_th) /
           (pq.two_sigma_sq() * s.budget.q_q) / s.budget.gamma_bar;
}

double i9_fixed(const OpaScenario& s, int nodes)
{
    if (nodes < 1)
        throw DomainError("i9_fixed: nodes must be positive");
    const double beta = s.beta();
    const double ln_beta = std::log(beta);
    const auto rule = quad::chebyshev_gauss_rule(nodes);
    const auto& h = s.user_q.h_coeff();
    double total = 0;
    for (int k = 0; k < nodes; ++k) {
        const double phi = rule.nodes[k];
        const double one_plus = 1 + phi;
        // e^{beta} e^{-4 beta/(1+phi)^2} combined so the exponent stays <= 0
        const double ln_common = std::log(rule.weights[k]) + 0.5 * std::log1p(-phi * phi) +
                                 std::log(std::log((phi + 3) / 2)) - 3 * std::log(one_plus) +
                                 beta * (1 - 4 / (one_plus * one_plus));
        const double ln_ratio = std::log((phi + 3) * (1 - phi)) - 2 * std::log(one_plus);
        double inner = 0;
        for (int j = s.user_q.n_terms(); j-- > 0;)
            if (h[j] != 0)
                inner += h[j] * std::exp(ln_common + (j + 1) * ln_beta -
                                         specfun::ln_factorial(j) + j * ln_ratio);
        total += inner;
    }
    return 8 * total / std::numbers::ln2;
}

double i9_quadrature(const OpaScenario& s)
{
    const double beta = s.beta();
    const auto& h = s.user_q.h_coeff();
    double total = 0;
    for (int j = s.user_q.n_terms(); j-- > 0;)
        if (h[j] != 0)
            total += h[j] * quad::gamma_expectation(
                                [beta](double u) { return std::log2(1 + 1 / std::sqrt(1 + u / beta)); },
                                j + 1.0);
    return total;
}

CapacityTerms capacity_terms(const OpaScenario& s)
{
    s.validate();
    const double alpha = s.alpha();
    const double beta = s.beta();
    const auto& h_p = s.user_p.h_coeff();
    const auto& h_q = s.user_q.h_coeff();
    CapacityTerms t;

    double sum1 = 0, sum2 = 0, psi = 0;
    for (int j = s.user_p.n_terms(); j-- > 0;) {
        sum1 += h_p[j] * (j + 1.0);
        sum2 += h_p[j] * (j + 1.0) * (j + 2.0);
        psi += h_p[j] * specfun::digamma(j + 1.0);
    }
    t.mean_x = sum1 / alpha;
    t.mean_x_sq = sum2 / (alpha * alpha);
    t.mean_ln_x = -std::log(alpha) + psi;

    double w = 0, first_q = 0, ln_z = 0;
    for (int j = s.user_q.n_terms(); j-- > 0;) {
        if (h_q[j] == 0)
            continue;
        // beta^{j+1} U(j+1, j+5/2, beta) = E[(1 + G/beta)^{1/2}], G ~ Gamma(j+1)
        w += h_q[j] * specfun::kummer_u_scaled(j + 1.0, j + 2.5, beta);
        first_q += h_q[j] * (j + 1.0);
        ln_z += h_q[j] * specfun::gamma_mean_log1p(j, 1 / beta);
    }
    t.mean_z = w;
    t.mean_z_sq = 1 + first_q / beta;
    t.mean_ln_z = 0.5 * ln_z;

    const double mean = t.mean_x + t.mean_z;
    const double second = t.mean_z_sq + t.mean_x_sq + 2 * t.mean_z * t.mean_x;
    const double variance = second - mean * mean;
    t.i8_approx = (std::log1p(mean) - variance / (2 * (1 + mean) * (1 + mean))) / std::numbers::ln2;
    t.i8_lower = std::log2(1 + std::exp(t.mean_ln_z) + std::exp(t.mean_ln_x));
    t.i8_upper = std::log2(1 + mean);

    // the integrand peaks within ~1/beta of phi = 1; the nearest node must fall inside
    int nodes = s.quad_ec_nodes;
    while (nodes < kMaxNodes && nodes < std::numbers::pi * std::sqrt(beta))
        nodes *= 2;
    double current = i9_fixed(s, nodes);
    bool settled = false;
    while (!settled && nodes * 2 <= kMaxNodes) {
        const double next = i9_fixed(s, nodes * 2);
        nodes *= 2;
        settled = std::abs(next - current) <= kNodeStability;
        current = next;
    }
    if (settled) {
        t.i9 = current;
        t.i9_nodes = nodes;
    } else {
        // error of the rule falls as nodes^-2; large beta needs more than the cap
        t.i9 = i9_quadrature(s);
        t.i9_nodes = 0;
    }
    return t;
}

double ec_approx(const OpaScenario& s)
{
    const auto t = capacity_terms(s);
    return std::max(0.0, t.i8_approx - t.i9);
}

double ec_lower(const OpaScenario& s)
{
    const auto t = capacity_terms(s);
    return std::max(0.0, t.i8_lower - t.i9);
}

double ec_upper(const OpaScenario& s)
{
    const auto t = capacity_terms(s);
    return std::max(0.0, t.i8_upper - t.i9);
}

}  // namespace opa
}  // namespace nomaftr
