// SPDX-License-Identifier: Apache-2.0
#include "nomaftr/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nomaftr/error.hpp"
#include "nomaftr/rng.hpp"
#include "nomaftr/stats.hpp"

namespace nomaftr {

void Scenario::validate() const
{
    user_p.validate();
    user_q.validate();
    if (!(budget.q_p > 0) || !(budget.q_q > 0))
        throw DomainError("Scenario: gains must be positive");
    if (!(budget.q_p > budget.q_q))
        throw DomainError("Scenario: the near user needs the larger gain (q_p > q_q)");
    if (schemes.empty())
        throw DomainError("Scenario: no scheme selected");
    for (const auto& s : schemes)
        if (s.kind == Scheme::Kind::gpa)
            GpaConfig{s.a}.validate();
    if (antennas.transmit < 1 || antennas.receive < 1)
        throw DomainError("Scenario: antenna counts must be at least 1");
    if (antennas.links() > 256)
        throw DomainError("Scenario: at most 256 links per user");
    if (n_samples < 10'000)
        throw DomainError("Scenario: needs at least 1e4 samples");
    if (gamma_th_list.empty() || gamma_bar_grid_db.empty())
        throw DomainError("Scenario: threshold and SNR grids must be non-empty");
    for (double t : gamma_th_list)
        if (!(t > 0))
            throw DomainError("Scenario: thresholds must be positive");
    for (double g : gamma_bar_grid_db)
        if (!std::isfinite(g))
            throw DomainError("Scenario: SNR grid values must be finite");
}

std::string Scenario::fingerprint() const
{
    std::ostringstream os;
    os.precision(17);
    os << "p(" << user_p.describe() << ") q(" << user_q.describe() << ") Q_p=" << budget.q_p
       << " Q_q=" << budget.q_q << " antennas=" << antennas.transmit << "x" << antennas.receive;
    return os.str();
}

namespace mc {
namespace {

constexpr std::uint32_t kUserStride = 256;

// Fills gains for one chunk; branch 0 is the SISO stream.
void effective_chunk(const ftr::Sampler& draw, const Antennas& antennas, std::uint64_t seed,
                     std::uint32_t chunk, int user_index, double* out, std::size_t count)
{
    const int links = antennas.links();
    std::fill(out, out + count, 0.0);
    for (int b = 0; b < links; ++b) {
        rng::Stream stream(seed, chunk, user_index * kUserStride + b);
        for (std::size_t i = 0; i < count; ++i)
            out[i] = std::max(out[i], draw(stream));
    }
}

struct Tally {
    // outage counts [scheme][user][gamma_bar][gamma_th]
    std::vector<std::uint64_t> outages;
    // sum rate moments [scheme][gamma_bar]
    std::vector<stats::Moments> rates;
};

struct Layout {
    std::size_t schemes, grid, thresholds;
    std::size_t op(std::size_t s, int user, std::size_t g, std::size_t t) const
    {
        return ((s * 2 + user) * grid + g) * thresholds + t;
    }
    std::size_t rate(std::size_t s, std::size_t g) const { return s * grid + g; }
};

Tally run(const Scenario& sc, bool want_op, bool want_rate)
{
    sc.validate();
    const Layout lay{sc.schemes.size(), sc.gamma_bar_grid_db.size(), sc.gamma_th_list.size()};
    std::vector<double> gamma_bar(lay.grid);
    for (std::size_t g = 0; g < lay.grid; ++g)
        gamma_bar[g] = noma::db_to_linear(sc.gamma_bar_grid_db[g]);

    const ftr::Sampler draw_p(sc.user_p);
    const ftr::Sampler draw_q(sc.user_q);
    const std::size_t chunks = rng::chunk_count(sc.n_samples);
    std::vector<Tally> per_chunk(chunks);

    rng::parallel_for(chunks, [&](std::size_t c) {
        const std::uint64_t begin = c * rng::kChunkSize;
        const std::size_t count =
            static_cast<std::size_t>(std::min<std::uint64_t>(rng::kChunkSize, sc.n_samples - begin));
        std::vector<double> hp(count), hq(count);
        effective_chunk(draw_p, sc.antennas, sc.seed, static_cast<std::uint32_t>(c), 0, hp.data(),
                        count);
        effective_chunk(draw_q, sc.antennas, sc.seed, static_cast<std::uint32_t>(c), 1, hq.data(),
                        count);
        Tally& t = per_chunk[c];
        if (want_op)
            t.outages.assign(lay.schemes * 2 * lay.grid * lay.thresholds, 0);
        if (want_rate)
            t.rates.assign(lay.schemes * lay.grid, {});
        for (std::size_t s = 0; s < lay.schemes; ++s) {
            const Scheme& scheme = sc.schemes[s];
            const bool has_op = want_op && scheme.kind != Scheme::Kind::tdma;
            for (std::size_t g = 0; g < lay.grid; ++g) {
                LinkBudget budget = sc.budget;
                budget.gamma_bar = gamma_bar[g];
                std::uint64_t* counts = has_op ? &t.outages[lay.op(s, 0, g, 0)] : nullptr;
                std::uint64_t* counts_q = has_op ? &t.outages[lay.op(s, 1, g, 0)] : nullptr;
                stats::Moments* rate = want_rate ? &t.rates[lay.rate(s, g)] : nullptr;
                for (std::size_t i = 0; i < count; ++i) {
                    if (has_op) {
                        const SinrPair sinr = scheme.kind == Scheme::Kind::gpa
                                                  ? noma::sinr_gpa(scheme.a, budget, hp[i], hq[i])
                                                  : noma::sinr_opa(budget, hp[i], hq[i]);
                        for (std::size_t k = 0; k < lay.thresholds; ++k) {
                            counts[k] += sinr.p <= sc.gamma_th_list[k];
                            counts_q[k] += sinr.q <= sc.gamma_th_list[k];
                        }
                    }
                    if (rate)
                        rate->add(noma::sum_rate(scheme, budget, hp[i], hq[i]));
                }
            }
        }
    });

    // fixed reduction order: chunk index
    Tally total;
    if (want_op)
        total.outages.assign(lay.schemes * 2 * lay.grid * lay.thresholds, 0);
    if (want_rate)
        total.rates.assign(lay.schemes * lay.grid, {});
    for (const auto& t : per_chunk) {
        for (std::size_t i = 0; i < t.outages.size(); ++i)
            total.outages[i] += t.outages[i];
        for (std::size_t i = 0; i < t.rates.size(); ++i)
            total.rates[i].merge(t.rates[i]);
    }
    return total;
}

SweepResult base_result(const Scenario& sc, Metric metric, const std::string& user,
                        const Scheme& scheme)
{
    SweepResult r;
    r.axis = sc.gamma_bar_grid_db;
    r.metric = metric;
    r.kind = "monte_carlo";
    r.user = user;
    r.set_meta("scheme", scheme.name());
    if (scheme.kind == Scheme::Kind::gpa)
        r.set_meta("a", format_double(scheme.a));
    r.set_meta("seed", std::to_string(sc.seed));
    r.set_meta("samples", std::to_string(sc.n_samples));
    r.set_meta("scenario", sc.fingerprint());
    return r;
}

std::vector<SweepResult> rate_results(const Scenario& sc, Metric metric)
{
    const Tally t = run(sc, false, true);
    const Layout lay{sc.schemes.size(), sc.gamma_bar_grid_db.size(), sc.gamma_th_list.size()};
    std::vector<SweepResult> out;
    for (std::size_t s = 0; s < lay.schemes; ++s) {
        SweepResult r = base_result(sc, metric, "sum", sc.schemes[s]);
        for (std::size_t g = 0; g < lay.grid; ++g) {
            const auto ci = t.rates[lay.rate(s, g)].interval();
            r.estimate.push_back(ci.estimate);
            r.ci_lo.push_back(ci.lo);
            r.ci_hi.push_back(ci.hi);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::vector<double> draw_effective_gain(const FtrParams& params, const Antennas& antennas,
                                        std::uint64_t n, std::uint64_t seed, int user_index)
{
    params.validate();
    if (antennas.transmit < 1 || antennas.receive < 1 || antennas.links() > 256)
        throw DomainError("draw_effective_gain: antenna counts must be in [1, 256] links");
    if (n < 1)
        throw DomainError("draw_effective_gain: n must be positive");
    if (user_index < 0 || user_index > 255)
        throw DomainError("draw_effective_gain: user_index must lie in [0, 255]");
    const ftr::Sampler draw(params);
    std::vector<double> out(n);
    rng::parallel_for(rng::chunk_count(n), [&](std::size_t c) {
        const std::size_t begin = c * rng::kChunkSize;
        const std::size_t len = std::min<std::size_t>(rng::kChunkSize, n - begin);
        effective_chunk(draw, antennas, seed, static_cast<std::uint32_t>(c), user_index,
                        out.data() + begin, len);
    });
    return out;
}

std::vector<SweepResult> simulate_op(const Scenario& sc)
{
    const Tally t = run(sc, true, false);
    const Layout lay{sc.schemes.size(), sc.gamma_bar_grid_db.size(), sc.gamma_th_list.size()};
    std::vector<SweepResult> out;
    for (std::size_t s = 0; s < lay.schemes; ++s) {
        if (sc.schemes[s].kind == Scheme::Kind::tdma)
            continue;
        for (int user = 0; user < 2; ++user)
            for (std::size_t k = 0; k < lay.thresholds; ++k) {
                SweepResult r = base_result(sc, user == 0 ? Metric::op_p : Metric::op_q,
                                            user == 0 ? "p" : "q", sc.schemes[s]);
                r.set_meta("gamma_th", format_double(sc.gamma_th_list[k]));
                for (std::size_t g = 0; g < lay.grid; ++g) {
                    const auto w = stats::wilson(t.outages[lay.op(s, user, g, k)], sc.n_samples);
                    r.estimate.push_back(w.estimate);
                    r.ci_lo.push_back(w.lo);
                    r.ci_hi.push_back(w.hi);
                }
                out.push_back(std::move(r));
            }
    }
    return out;
}

std::vector<SweepResult> simulate_ec(const Scenario& sc)
{
    return rate_results(sc, Metric::ec);
}

std::vector<SweepResult> simulate_sum_rate(const Scenario& sc)
{
    return rate_results(sc, Metric::sum_rate);
}

}  // namespace mc
}  // namespace nomaftr
