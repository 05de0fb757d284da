// SPDX-License-Identifier: Apache-2.0
#include "nomaftr/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include <Eigen/Eigenvalues>

#include "nomaftr/error.hpp"
#include "nomaftr/specfun.hpp"

namespace nomaftr::quad {
namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525292406, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
    double lo, hi, value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment kronrod21(const Integrand& f, double lo, double hi)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double resg = 0;
    double resk = kWgk[10] * fc;
    double resabs = std::abs(resk);
    double fv1[10], fv2[10];
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        fv1[j] = f(center - dx);
        fv2[j] = f(center + dx);
        const double sum = fv1[j] + fv2[j];
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1)
            resg += kWg[j / 2] * sum;
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    const double value = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double error = std::abs((resk - resg) * half);
    if (resasc != 0 && error != 0)
        error = resasc * std::min(1.0, std::pow(200 * error / resasc, 1.5));
    if (resabs > std::numeric_limits<double>::min() / (50 * eps))
        error = std::max(50 * eps * resabs, error);
    return {lo, hi, value, error};
}

// L_n^(alpha)(x) and L_{n-1}^(alpha)(x), both divided by exp(ln_scale).
struct LaguerrePair {
    double ln, lnm1, ln_scale;
};

LaguerrePair laguerre_pair(int n, double alpha, double x)
{
    double lm1 = 1;
    double l = 1 + alpha - x;
    double ln_scale = 0;
    if (n == 1)
        return {l, lm1, 0};
    for (int k = 1; k < n; ++k) {
        const double next = ((2 * k + 1 + alpha - x) * l - (k + alpha) * lm1) / (k + 1);
        lm1 = l;
        l = next;
        if (std::abs(l) > 1e100) {
            l *= 1e-100;
            lm1 *= 1e-100;
            ln_scale += 100 * std::numbers::ln10;
        }
    }
    return {l, lm1, ln_scale};
}

}  // namespace

QuadratureRule chebyshev_gauss_rule(int count)
{
    if (count < 1)
        throw DomainError("chebyshev_gauss_rule: count must be positive");
    QuadratureRule rule{RuleKind::chebyshev_gauss_first_kind, count, {}, {}};
    rule.nodes.resize(count);
    rule.weights.assign(count, std::numbers::pi / count);
    for (int k = 1; k <= count; ++k)
        rule.nodes[k - 1] = std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * count));
    return rule;
}

QuadratureRule gauss_laguerre_rule(int count, double alpha)
{
    if (count < 1)
        throw DomainError("gauss_laguerre_rule: count must be positive");
    if (!(alpha > -1))
        throw DomainError("gauss_laguerre_rule: alpha must exceed -1");

    // Golub-Welsch on the Jacobi matrix of the generalized Laguerre polynomials
    Eigen::VectorXd diag(count);
    Eigen::VectorXd sub(std::max(count - 1, 1));
    for (int i = 0; i < count; ++i)
        diag[i] = 2.0 * i + alpha + 1.0;
    for (int i = 1; i < count; ++i)
        sub[i - 1] = std::sqrt(i * (i + alpha));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(count - 1), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("gauss_laguerre_rule: eigensolver failed");

    QuadratureRule rule{RuleKind::gauss_laguerre, count, {}, {}};
    rule.nodes.resize(count);
    rule.weights.resize(count);
    const double ln_norm = specfun::ln_gamma(count + alpha + 1.0) - specfun::ln_factorial(count);
    const double mu0 = std::exp(specfun::ln_gamma(alpha + 1.0));
    for (int i = 0; i < count; ++i) {
        double x = solver.eigenvalues()[i];
        // Newton polish, then w = Gamma(n+a+1) x / (n! (n+a)^2 L_{n-1}(x)^2)
        for (int iter = 0; iter < 3; ++iter) {
            const auto [ln, lnm1, ln_scale] = laguerre_pair(count, alpha, x);
            const double deriv = (count * ln - (count + alpha) * lnm1) / x;
            if (deriv != 0)
                x -= ln / deriv;
        }
        rule.nodes[i] = x;
        // eigenvector weights are accurate in absolute terms only
        const double v0 = solver.eigenvectors()(0, i);
        const double eigen_weight = mu0 * v0 * v0;
        if (eigen_weight > 1e-5 * mu0) {
            rule.weights[i] = eigen_weight;
        } else {
            const auto pair = laguerre_pair(count, alpha, x);
            rule.weights[i] = std::exp(ln_norm + std::log(x) - 2 * std::log(count + alpha) -
                                       2 * (std::log(std::abs(pair.lnm1)) + pair.ln_scale));
        }
    }
    return rule;
}

IntegrationResult integrate(const Integrand& f, double lo, double hi,
                            const IntegrationOptions& options)
{
    if (!(lo <= hi))
        throw DomainError("integrate: interval must satisfy lo <= hi");
    IntegrationResult result;
    if (lo == hi)
        return result;

    std::priority_queue<Segment> heap;
    Segment first = kronrod21(f, lo, hi);
    result.evaluations = 21;
    double total = first.value;
    double error = first.error;
    heap.push(first);
    // segments that cannot be bisected further stay out of the heap
    double frozen_value = 0;
    double frozen_error = 0;

    while (error > std::max(options.abs_tol, options.rel_tol * std::abs(total))) {
        if (heap.empty())
            break;
        if (result.evaluations + 42 > options.max_evaluations)
            throw ConvergenceError("integrate: evaluation cap reached with error estimate " +
                                   std::to_string(error) + " on [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "]");
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            frozen_value += worst.value;
            frozen_error += worst.error;
            continue;
        }
        Segment left = kronrod21(f, worst.lo, mid);
        Segment right = kronrod21(f, mid, worst.hi);
        result.evaluations += 42;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // resum to shed the rounding drift of the running updates
    double sum = frozen_value;
    double err = frozen_error;
    while (!heap.empty()) {
        sum += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    result.value = sum;
    result.abs_error = err;
    if (!std::isfinite(result.value))
        throw ConvergenceError("integrate: non-finite integrand");
    return result;
}

IntegrationResult integrate_to_infinity(const Integrand& f, double lo,
                                        const IntegrationOptions& options)
{
    auto mapped = [&f, lo](double t) {
        const double s = 1.0 - t;
        const double x = lo + t / s;
        if (!std::isfinite(x))
            return 0.0;
        const double v = f(x);
        return v == 0 ? 0.0 : v / (s * s);
    };
    return integrate(mapped, 0.0, 1.0, options);
}

double gamma_expectation(const Integrand& g, double shape, const IntegrationOptions& options)
{
    if (!(shape > 0))
        throw DomainError("gamma_expectation: shape must be positive");
    IntegrationOptions piece = options;
    piece.abs_tol = options.abs_tol / 4;

    if (shape < 1) {
        // u = v^(1/shape) removes the u^(shape-1) endpoint singularity
        const double norm = specfun::ln_gamma(shape + 1);
        auto h = [&](double v) {
            if (v <= 0)
                return g(0.0) * std::exp(-norm);
            const double u = std::pow(v, 1.0 / shape);
            return g(u) * std::exp(-u - norm);
        };
        return integrate(h, 0.0, 1.0, piece).value + integrate_to_infinity(h, 1.0, piece).value;
    }

    const double norm = specfun::ln_gamma(shape);
    auto h = [&](double u) {
        if (u <= 0)
            return shape == 1 ? g(0.0) : 0.0;
        return g(u) * std::exp((shape - 1) * std::log(u) - u - norm);
    };
    const double mode = shape - 1;
    const double spread = std::sqrt(shape);
    std::vector<double> cuts{0.0};
    if (mode - 8 * spread > 0)
        cuts.push_back(mode - 8 * spread);
    if (mode > 0)
        cuts.push_back(mode);
    cuts.push_back(mode + 10 * spread + 20);

    double sum = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        sum += integrate(h, cuts[i], cuts[i + 1], piece).value;
    sum += integrate_to_infinity(h, cuts.back(), piece).value;
    return sum;
}

}  // namespace nomaftr::quad
