// SPDX-License-Identifier: Apache-2.0
#include "nomaftr/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nomaftr/detail/legendre.hpp"
#include "nomaftr/error.hpp"
#include "nomaftr/quadrature.hpp"

namespace nomaftr::specfun {
namespace {

constexpr double kLn2 = std::numbers::ln2;

// ln|Gamma(x)| and its sign; x must not be a non-positive integer
double ln_gamma_signed(double x, int& sign)
{
#if defined(__GLIBC__)
    return ::lgamma_r(x, &sign);
#else
    const double v = std::lgamma(x);
    sign = (x > 0 || std::fmod(std::floor(x), 2.0) != 0) ? 1 : -1;
    return v;
#endif
}

bool is_nonpositive_integer(double x)
{
    return x <= 0 && x == std::floor(x);
}

struct FactorialTable {
    static constexpr int kSize = 2048;
    std::array<double, kSize> ln;
    FactorialTable()
    {
        ln[0] = 0;
        for (int i = 1; i < kSize; ++i)
            ln[i] = ln_gamma(i + 1.0);
    }
};

const FactorialTable& factorials()
{
    static const FactorialTable table;
    return table;
}

}  // namespace

double ln_gamma(double x)
{
    if (!(x > 0))
        throw DomainError("ln_gamma: argument must be positive, got " + std::to_string(x));
    int sign = 1;
    return ln_gamma_signed(x, sign);
}

double ln_factorial(int n)
{
    if (n < 0)
        throw DomainError("ln_factorial: negative argument");
    if (n < FactorialTable::kSize)
        return factorials().ln[n];
    return ln_gamma(n + 1.0);
}

double digamma(double x)
{
    if (!(x > 0))
        throw DomainError("digamma: argument must be positive");
    double shift = 0;
    while (x < 10) {
        shift -= 1 / x;
        x += 1;
    }
    const double r = 1 / (x * x);
    // Bernoulli-number tail of the asymptotic expansion
    const double series =
        r * (1.0 / 12 -
             r * (1.0 / 120 -
                  r * (1.0 / 252 -
                       r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12))))));
    return shift + std::log(x) - 0.5 / x - series;
}

double ln_double_factorial(int n)
{
    if (n == -1)
        return 0;
    if (n < 1 || n % 2 == 0)
        throw DomainError("double_factorial: argument must be odd and >= -1");
    // (2k+1)!! = (2k+1)! / (2^k k!)
    const int k = (n - 1) / 2;
    return ln_factorial(n) - k * kLn2 - ln_factorial(k);
}

double double_factorial(int n)
{
    if (n <= 15 && n >= -1 && (n == -1 || n % 2 == 1)) {
        double p = 1;
        for (int i = 3; i <= n; i += 2)
            p *= i;
        return p;
    }
    return std::round(std::exp(ln_double_factorial(n)));
}

double erfcx(double x)
{
    if (x < 0)
        return 2 * std::exp(x * x) - erfcx(-x);
    if (x < 25) {
        // exp(x^2) split into exactly representable head and rounding tail
        const double hi = x * x;
        const double lo = std::fma(x, x, -hi);
        return std::exp(hi) * std::exp(lo) * std::erfc(x);
    }
    const double r = 1 / (2 * x * x);
    double term = 1;
    double sum = 1;
    for (int k = 1; k < 30; ++k) {
        term *= -(2 * k - 1) * r;
        sum += term;
        if (std::abs(term) < 1e-17 * sum)
            break;
    }
    return sum / (x * std::sqrt(std::numbers::pi));
}

std::complex<double> legendre_p(double degree, int order, double arg)
{
    if (!(arg >= 1))
        throw DomainError("legendre_p: argument must be >= 1");
    double nu = degree;
    if (nu < -0.5)
        nu = -nu - 1;  // P_nu = P_{-nu-1}
    const int n = order < 0 ? -order : order;
    double value = detail::legendre_negative_order<double>(nu, n, arg, 1e-14);
    if (order > 0) {
        // integer-order reflection; 1/Gamma(nu-n+1) vanishes at its poles
        if (is_nonpositive_integer(nu - n + 1))
            return {0.0, 0.0};
        int s1 = 1, s2 = 1;
        const double ln_ratio = ln_gamma_signed(nu + n + 1, s1) - ln_gamma_signed(nu - n + 1, s2);
        value *= s1 * s2 * std::exp(ln_ratio);
    }
    return {value, 0.0};
}

double kummer_u_scaled(double a, double b, double z)
{
    if (!(a > 0) || !(z > 0))
        throw DomainError("kummer_u: requires a > 0 and z > 0");
    const double power = b - a - 1;
    if (power == 0)
        return 1;
    return quad::gamma_expectation(
        [power, z](double u) { return std::exp(power * std::log1p(u / z)); }, a);
}

double kummer_u(double a, double b, double z)
{
    const double scaled = kummer_u_scaled(a, b, z);
    return std::exp(-a * std::log(z)) * scaled;
}

std::vector<double> ln_gaussian_moments(double x, int max_order)
{
    if (!(x >= 0))
        throw DomainError("ln_gaussian_moments: x must be non-negative");
    if (max_order < 0)
        throw DomainError("ln_gaussian_moments: negative order");

    std::vector<double> out(max_order + 1);
    const double s0 = std::sqrt(std::numbers::pi / 2) * erfcx(x / std::numbers::sqrt2);
    out[0] = std::log(s0);
    if (max_order == 0)
        return out;

    // s_{nu+1} = nu s_{nu-1} - x s_nu; the target solution decays like
    // exp(-x sqrt(nu)) against the companion's exp(+x sqrt(nu))
    const bool forward = x <= 1 && 2 * x * std::sqrt(max_order + 1.0) <= 8;
    std::vector<double> ratio(max_order + 1);
    if (forward) {
        ratio[1] = 1 / s0 - x;
        for (int nu = 1; nu < max_order; ++nu)
            ratio[nu + 1] = nu / ratio[nu] - x;
    } else {
        const double lift = std::sqrt(static_cast<double>(max_order)) + 20 / x;
        const int start = std::max(max_order + 1, static_cast<int>(std::ceil(lift * lift)));
        double r = 0.5 * (-x + std::sqrt(x * x + 4.0 * (start + 1)));
        for (int nu = start; nu >= 1; --nu) {
            r = nu / (x + r);
            if (nu <= max_order)
                ratio[nu] = r;
        }
    }
    for (int nu = 1; nu <= max_order; ++nu) {
        if (!(ratio[nu] > 0))
            throw ConvergenceError("ln_gaussian_moments: ratio recurrence lost positivity");
        out[nu] = out[nu - 1] + std::log(ratio[nu]);
    }
    return out;
}

std::vector<double> ln_gaussian_integrals(double c, double b, int max_order)
{
    if (!(b > 0) || !(c >= 0))
        throw DomainError("ln_gaussian_integrals: requires c >= 0 and b > 0");
    const double scale = std::sqrt(2 * b);
    std::vector<double> out = ln_gaussian_moments(c / scale, max_order);
    const double ln_scale = std::log(scale);
    for (int nu = 0; nu <= max_order; ++nu)
        out[nu] -= (nu + 1) * ln_scale;
    return out;
}

double parabolic_cylinder_d(double order, double arg)
{
    if (!(arg >= 0))
        throw DomainError("parabolic_cylinder_d: argument must be non-negative");
    if (order > 0 || order != std::floor(order))
        throw DomainError("parabolic_cylinder_d: order must be a non-positive integer");
    if (order == 0)
        return std::exp(-arg * arg / 4);
    const int nu = static_cast<int>(-order) - 1;
    const double ln_s = ln_gaussian_moments(arg, nu)[nu];
    return std::exp(ln_s - ln_factorial(nu) - arg * arg / 4);
}

double gamma_mean_log1p(int j, double y)
{
    if (j < 0 || !(y >= 0))
        throw DomainError("meijer_g_log: requires j >= 0 and y >= 0");
    if (y == 0)
        return 0;
    return quad::gamma_expectation([y](double u) { return std::log1p(y * u); }, j + 1.0);
}

double meijer_g_log(int j, double y)
{
    return std::exp(ln_factorial(j)) * gamma_mean_log1p(j, y);
}

}  // namespace nomaftr::specfun
