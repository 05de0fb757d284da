// SPDX-License-Identifier: Apache-2.0
#include "nomaftr/noma.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "nomaftr/error.hpp"
#include "nomaftr/rng.hpp"
#include "nomaftr/stats.hpp"

namespace nomaftr {

void LinkBudget::validate() const
{
    if (!(q_p > 0) || !(q_q > 0))
        throw DomainError("LinkBudget: gains must be positive");
    if (!(gamma_bar > 0) || !std::isfinite(gamma_bar))
        throw DomainError("LinkBudget: gamma_bar must be positive and finite");
    if (!(q_p > q_q))
        throw DomainError("LinkBudget: the near user needs the larger gain (q_p > q_q)");
}

void GpaConfig::validate() const
{
    if (!(a > 0 && a < 0.5))
        throw DomainError("GpaConfig: a must lie in (0, 0.5)");
}

std::string Scheme::name() const
{
    switch (kind) {
    case Kind::gpa:
        return "gpa";
    case Kind::opa:
        return "opa";
    case Kind::tdma:
        return "tdma";
    }
    return "?";
}

namespace noma {
namespace {

void check_gains(double h_p, double h_q)
{
    if (!(h_p >= 0) || !(h_q >= 0))
        throw DomainError("channel gains must be non-negative");
}

}  // namespace

SinrPair sinr_gpa(double a, const LinkBudget& budget, double h_p, double h_q)
{
    if (!(a > 0 && a < 1))
        throw DomainError("sinr_gpa: a must lie in (0, 1)");
    check_gains(h_p, h_q);
    const double x_q = budget.gamma_bar * budget.q_q * h_q;
    return {a * budget.gamma_bar * budget.q_p * h_p, (1 - a) * x_q / (a * x_q + 1)};
}

double a_opt(const LinkBudget& budget, double h_q)
{
    check_gains(0, h_q);
    return 1 / (std::sqrt(1 + budget.gamma_bar * budget.q_q * h_q) + 1);
}

Interval a_range(const LinkBudget& budget, double h_p, double h_q)
{
    check_gains(h_p, h_q);
    return {1 / (std::sqrt(1 + budget.gamma_bar * budget.q_p * h_p) + 1), a_opt(budget, h_q)};
}

SinrPair sinr_opa(const LinkBudget& budget, double h_p, double h_q)
{
    check_gains(h_p, h_q);
    const double x_q = budget.gamma_bar * budget.q_q * h_q;
    const double root = std::sqrt(1 + x_q);
    // sqrt(1 + x) - 1 written without cancellation
    return {budget.gamma_bar * budget.q_p * h_p / (root + 1), x_q / (root + 1)};
}

double sum_rate(const Scheme& scheme, const LinkBudget& budget, double h_p, double h_q)
{
    SinrPair s;
    switch (scheme.kind) {
    case Scheme::Kind::gpa:
        s = sinr_gpa(scheme.a, budget, h_p, h_q);
        break;
    case Scheme::Kind::opa:
        s = sinr_opa(budget, h_p, h_q);
        break;
    case Scheme::Kind::tdma:
        check_gains(h_p, h_q);
        return 0.5 * std::log2(1 + budget.gamma_bar * budget.q_p * h_p) +
               0.5 * std::log2(1 + budget.gamma_bar * budget.q_q * h_q);
    }
    return std::log2(1 + s.p) + std::log2(1 + s.q);
}

double sum_rate_derivative(double a, const LinkBudget& budget, double h_p, double h_q)
{
    if (!(a > 0 && a < 1))
        throw DomainError("sum_rate_derivative: a must lie in (0, 1)");
    check_gains(h_p, h_q);
    // with N_0 = 1 and P_s = gamma_bar
    const double g = budget.gamma_bar;
    const double x_p = budget.q_p * h_p;
    const double x_q = budget.q_q * h_q;
    return g * (x_p - x_q) / ((a * g * x_p + 1) * (a * g * x_q + 1)) / std::numbers::ln2;
}

OrderEstimate prob_channel_order(double ratio, const FtrParams& params_p,
                                 const FtrParams& params_q, std::uint64_t n, std::uint64_t seed)
{
    if (!(ratio > 0))
        throw DomainError("prob_channel_order: ratio must be positive");
    if (n < 10'000)
        throw DomainError("prob_channel_order: needs at least 1e4 samples");
    const ftr::Sampler draw_p(params_p);
    const ftr::Sampler draw_q(params_q);
    const std::size_t chunks = rng::chunk_count(n);
    std::vector<std::uint64_t> hits(chunks, 0);
    rng::parallel_for(chunks, [&](std::size_t c) {
        rng::Stream sp(seed, static_cast<std::uint32_t>(c), 0);
        rng::Stream sq(seed, static_cast<std::uint32_t>(c), 256);
        const std::uint64_t begin = c * rng::kChunkSize;
        const std::uint64_t end = std::min<std::uint64_t>(n, begin + rng::kChunkSize);
        std::uint64_t count = 0;
        for (std::uint64_t i = begin; i < end; ++i)
            count += ratio * draw_p(sp) > draw_q(sq);
        hits[c] = count;
    });
    std::uint64_t total = 0;
    for (auto h : hits)
        total += h;
    const auto w = stats::wilson(total, n);
    return {w.estimate, w.lo, w.hi};
}

double sic_power_ratio(const LinkBudget& budget, double h_q)
{
    check_gains(0, h_q);
    return std::sqrt(1 + budget.gamma_bar * budget.q_q * h_q);
}

double crossover_gamma_bar(double a, const LinkBudget& budget, double h_q)
{
    if (!(a > 0 && a < 0.5))
        throw DomainError("crossover_gamma_bar: a must lie in (0, 0.5)");
    if (!(h_q > 0))
        throw DomainError("crossover_gamma_bar: h_q must be positive");
    return (1 / a - 2) / (budget.q_q * h_q * a);
}

double crossover_gamma_th(double a)
{
    if (!(a > 0 && a < 0.5))
        throw DomainError("crossover_gamma_th: a must lie in (0, 0.5)");
    return 1 / a - 2;
}

}  // namespace noma
}  // namespace nomaftr
