// SPDX-License-Identifier: Apache-2.0
#include "nomaftr/ftr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nomaftr/detail/ftr_coefficients.hpp"
#include "nomaftr/error.hpp"
#include "nomaftr/specfun.hpp"

namespace nomaftr {
namespace {

// Poisson(t) masses p_0..p_{n-1} plus the upper tail sum_{i >= n} p_i.
struct PoissonTable {
    std::vector<double> mass;
    double tail = 0;
};

void poisson_table(double t, int n, PoissonTable& out)
{
    out.mass.assign(n, 0.0);
    if (t == 0) {
        out.mass[0] = 1;
        out.tail = 0;
        return;
    }
    const double ln_t = std::log(t);
    // start at the largest mass inside the table and walk outwards
    const int peak = std::min(n - 1, static_cast<int>(t));
    const double p_peak = std::exp(-t + peak * ln_t - specfun::ln_factorial(peak));
    out.mass[peak] = p_peak;
    for (int i = peak; i > 0 && out.mass[i] > 0; --i)
        out.mass[i - 1] = out.mass[i] * i / t;
    for (int i = peak + 1; i < n; ++i)
        out.mass[i] = out.mass[i - 1] * t / i;

    const double p_n = out.mass[n - 1] * t / n;
    if (t < n) {
        double term = p_n;
        double sum = 0;
        for (int k = 1; term > 1e-17 * sum && k < 100000; ++k) {
            sum += term;
            term *= t / (n + k);
        }
        out.tail = sum;
    } else {
        double below = 0;
        for (double p : out.mass)
            below += p;
        out.tail = std::max(0.0, 1 - below);
    }
}

}  // namespace

void FtrParams::validate() const
{
    if (!(m > 0))
        throw DomainError("FtrParams.m must be positive");
    if (!(k >= 0))
        throw DomainError("FtrParams.K must be non-negative");
    if (!(delta >= 0 && delta <= 1))
        throw DomainError("FtrParams.delta must lie in [0, 1]");
    if (!(sigma > 0))
        throw DomainError("FtrParams.sigma must be positive");
    if (!std::isfinite(m) || !std::isfinite(k) || !std::isfinite(sigma))
        throw DomainError("FtrParams must be finite");
}

std::string FtrParams::describe() const
{
    std::ostringstream os;
    os.precision(17);
    os << "m=" << m << ",K=" << k << ",delta=" << delta << ",sigma=" << sigma;
    return os.str();
}

FtrSeries::FtrSeries(FtrParams params, std::vector<double> d, std::vector<double> h_coeff,
                     double residual_imag_max, double cancellation_error)
    : params_(params),
      d_(std::move(d)),
      h_(std::move(h_coeff)),
      residual_imag_max_(residual_imag_max),
      cancellation_error_(cancellation_error)
{
    if (h_.empty() || d_.size() != h_.size())
        throw DomainError("FtrSeries: coefficient lists must be non-empty and of equal length");
    ln_fact_.resize(h_.size() + 2);
    for (std::size_t j = 0; j < ln_fact_.size(); ++j)
        ln_fact_[j] = specfun::ln_factorial(static_cast<int>(j));
    // smallest terms first
    for (std::size_t j = h_.size(); j-- > 0;) {
        normalization_ += h_[j];
        first_moment_sum_ += h_[j] * (j + 1.0);
    }
}

bool FtrSeries::meets_invariants() const
{
    const double target = 1 + params_.k;
    return std::abs(normalization_ - 1) <= 1e-6 &&
           std::abs(first_moment_sum_ - target) <= 1e-5 * target &&
           residual_imag_max_ <= 1e-9 * *std::max_element(d_.begin(), d_.end());
}

namespace ftr {

double coeff_d(int j, const FtrParams& params)
{
    params.validate();
    return std::exp(detail::ln_coefficient(j, params).ln_d);
}

FtrSeries build_series(const FtrParams& params, int n_terms, TruncationGate gate)
{
    params.validate();
    if (n_terms < 1)
        throw DomainError("build_series: n_terms must be positive");

    std::vector<double> d(n_terms);
    std::vector<double> h(n_terms, 0.0);
    double worst_error = 0;
    const double ln_prefactor = params.m * std::log(params.m) - specfun::ln_gamma(params.m);
    for (int j = 0; j < n_terms; ++j) {
        const auto term = detail::ln_coefficient(j, params);
        d[j] = std::exp(term.ln_d);
        if (params.k == 0) {
            // H_0 = m^m d_0 / Gamma(m) = 1; higher terms carry K^j = 0
            h[j] = j == 0 ? 1.0 : 0.0;
            continue;
        }
        h[j] = std::exp(ln_prefactor + j * std::log(params.k) + term.ln_d -
                        specfun::ln_factorial(j));
        worst_error = std::max(worst_error, h[j] * term.relative_error);
    }
    if (worst_error > 1e-10)
        throw ConvergenceError("build_series: coefficient cancellation error " +
                               std::to_string(worst_error) + " for " + params.describe());

    FtrSeries series(params, std::move(d), std::move(h), 0.0, worst_error);
    if (gate == TruncationGate::enforce && std::abs(series.normalization() - 1) > kTruncationGate)
        throw TruncationError("build_series: sum of H_j is " +
                              std::to_string(series.normalization()) + " with " +
                              std::to_string(n_terms) + " terms for " + params.describe() +
                              "; increase the number of terms");
    return series;
}

double pdf(double x, const FtrSeries& series)
{
    if (!(x >= 0))
        throw DomainError("pdf: x must be non-negative");
    const double scale = series.params().two_sigma_sq();
    const double t = x / scale;
    if (!std::isfinite(t))
        return 0;
    PoissonTable table;
    poisson_table(t, series.n_terms(), table);
    double sum = 0;
    const auto& h = series.h_coeff();
    for (int j = series.n_terms(); j-- > 0;)
        sum += h[j] * table.mass[j];
    return sum / scale;
}

namespace {

// sum_j H_j P(j+1, t) and sum_j H_j Q(j+1, t)
std::pair<double, double> incomplete_mixture(double x, const FtrSeries& series)
{
    const double t = x / series.params().two_sigma_sq();
    const auto& h = series.h_coeff();
    const int n = series.n_terms();
    if (t == 0)
        return {0.0, series.normalization()};
    if (!std::isfinite(t))
        return {series.normalization(), 0.0};
    PoissonTable table;
    poisson_table(t, n, table);
    double lower = 0;
    double upper = 0;
    if (t < n) {
        // P(j+1,t) = sum_{i>j} p_i accumulates downward
        double p_tail = table.tail;
        for (int j = n - 1; j >= 0; --j) {
            lower += h[j] * p_tail;
            upper += h[j] * (1 - p_tail);
            p_tail += table.mass[j];
        }
    } else {
        // Q(j+1,t) = sum_{i<=j} p_i accumulates upward
        double q_head = 0;
        for (int j = 0; j < n; ++j) {
            q_head += table.mass[j];
            lower += h[j] * (1 - q_head);
            upper += h[j] * q_head;
        }
    }
    return {lower, upper};
}

}  // namespace

double cdf(double x, const FtrSeries& series)
{
    if (!(x >= 0))
        throw DomainError("cdf: x must be non-negative");
    return std::clamp(incomplete_mixture(x, series).first, 0.0, 1.0);
}

double ccdf(double x, const FtrSeries& series)
{
    if (!(x >= 0))
        throw DomainError("ccdf: x must be non-negative");
    const double deficit = 1 - series.normalization();
    return std::clamp(incomplete_mixture(x, series).second + deficit, 0.0, 1.0);
}

double cdf_asymptotic(double x, const FtrParams& params)
{
    params.validate();
    if (!(x >= 0))
        throw DomainError("cdf_asymptotic: x must be non-negative");
    const double ln_d0 = detail::ln_coefficient(0, params).ln_d;
    const double ln_coeff = params.m * std::log(params.m) + ln_d0 - specfun::ln_gamma(params.m);
    return std::exp(ln_coeff) * x / params.two_sigma_sq();
}

double moment(int n, const FtrSeries& series)
{
    if (n < 1)
        throw DomainError("moment: order must be positive");
    const auto& h = series.h_coeff();
    double sum = 0;
    for (int j = series.n_terms(); j-- > 0;)
        sum += h[j] *
               std::exp(specfun::ln_factorial(j + n) - specfun::ln_factorial(j));
    return std::pow(series.params().two_sigma_sq(), n) * sum;
}

Sampler::Sampler(const FtrParams& params) : shape_(params.m), sigma_(params.sigma)
{
    params.validate();
    const double root = std::sqrt(1 - params.delta * params.delta);
    v1_ = params.sigma * std::sqrt(params.k * (1 + root));
    v2_ = params.sigma * std::sqrt(std::max(0.0, params.k * (1 - root)));
}

double Sampler::operator()(rng::Stream& stream) const
{
    const double amplitude = std::sqrt(stream.gamma(shape_) / shape_);
    const double phi1 = 2 * std::numbers::pi * stream.uniform();
    const double phi2 = 2 * std::numbers::pi * stream.uniform();
    const double re = amplitude * (v1_ * std::cos(phi1) + v2_ * std::cos(phi2)) +
                      sigma_ * stream.normal();
    const double im = amplitude * (v1_ * std::sin(phi1) + v2_ * std::sin(phi2)) +
                      sigma_ * stream.normal();
    return re * re + im * im;
}

void sample_chunk(const FtrParams& params, std::uint64_t seed, std::uint32_t chunk,
                  std::uint32_t tag, double* out, std::size_t count)
{
    const Sampler draw(params);
    rng::Stream stream(seed, chunk, tag);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = draw(stream);
}

std::vector<double> sample(const FtrParams& params, std::size_t count, std::uint64_t seed)
{
    params.validate();
    if (count < 1)
        throw DomainError("sample: count must be positive");
    std::vector<double> out(count);
    rng::parallel_for(rng::chunk_count(count), [&](std::size_t c) {
        const std::size_t begin = c * rng::kChunkSize;
        const std::size_t len = std::min(rng::kChunkSize, count - begin);
        sample_chunk(params, seed, static_cast<std::uint32_t>(c), 0, out.data() + begin, len);
    });
    return out;
}

}  // namespace ftr
}  // namespace nomaftr
