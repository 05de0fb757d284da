// SPDX-License-Identifier: Apache-2.0
#include "nomaftr/validation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nomaftr/analysis_gpa.hpp"
#include "nomaftr/analysis_opa.hpp"
#include "nomaftr/error.hpp"
#include "nomaftr/montecarlo.hpp"
#include "nomaftr/stats.hpp"

namespace nomaftr {
namespace {

constexpr double kSigmaBand = 3;
// closed-form slopes are fitted on this grid regardless of the sweep
const std::vector<double> kSlopeGridDb{55, 60, 65, 70, 75};

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

const SweepResult* find(const std::vector<SweepResult>& results, Metric metric,
                        const std::string& user, const std::string& scheme,
                        const std::string& gamma_th = {})
{
    for (const auto& r : results)
        if (r.metric == metric && r.user == user && r.meta_value("scheme") == scheme &&
            r.meta_value("gamma_th") == gamma_th)
            return &r;
    return nullptr;
}

LinkBudget budget_at(const RunConfig& cfg, double db)
{
    LinkBudget b = cfg.scenario.budget;
    b.gamma_bar = noma::db_to_linear(db);
    return b;
}

void series_checks(const char* user, const FtrSeries& s, Report& report)
{
    const double target = 1 + s.params().k;
    const double norm_err = std::abs(s.normalization() - 1);
    const double moment_err = std::abs(s.first_moment_sum() - target) / target;
    report.add({std::string("series.") + user + ".normalization", norm_err <= 1e-6, norm_err,
                "|sum H - 1| with " + std::to_string(s.n_terms()) + " terms, limit 1e-6"});
    report.add({std::string("series.") + user + ".first_moment", moment_err <= 1e-5, moment_err,
                "relative error of sum H (j+1) against 1 + K, limit 1e-5"});
}

struct OutageCurve {
    std::string scheme;
    std::string user;
    double gamma_th;
    std::vector<double> closed;
    bool forced = false;  //!< a_th <= 0 for the GPA far user
};

void outage_checks(const RunConfig& cfg, const FtrSeries& sp, const FtrSeries& sq,
                   const std::vector<SweepResult>& mc_results, Report& report)
{
    const auto& sc = cfg.scenario;
    const double n = static_cast<double>(sc.n_samples);
    for (const auto& scheme : sc.schemes) {
        if (scheme.kind == Scheme::Kind::tdma)
            continue;
        for (double gth : sc.gamma_th_list) {
            for (int user = 0; user < 2; ++user) {
                OutageCurve c{scheme.name(), user == 0 ? "p" : "q", gth, {}};
                if (scheme.kind == Scheme::Kind::gpa && user == 1)
                    c.forced = GpaConfig{scheme.a}.a_th(gth) <= 0;
                for (double db : sc.gamma_bar_grid_db) {
                    const LinkBudget b = budget_at(cfg, db);
                    if (scheme.kind == Scheme::Kind::gpa) {
                        const GpaScenario g{sp, sq, b, {scheme.a}};
                        c.closed.push_back(user == 0 ? gpa::op_p(gth, g) : gpa::op_q(gth, g));
                    } else {
                        const OpaScenario o{sp, sq, b, cfg.quad_nodes, cfg.quad_nodes};
                        c.closed.push_back(user == 0 ? opa::op_p(gth, o) : opa::op_q(gth, o));
                    }
                }
                const SweepResult* mc =
                    find(mc_results, user == 0 ? Metric::op_p : Metric::op_q, c.user, c.scheme,
                         format_double(gth));
                if (!mc)
                    throw std::logic_error("validate: missing Monte Carlo outage curve");

                const std::string base = "op_" + c.user + "." + c.scheme + ".gth" + fmt(gth);
                // concordance: binomial sigma under the closed-form probability
                double worst = 0;
                double worst_db = sc.gamma_bar_grid_db.front();
                bool ok = true;
                for (std::size_t i = 0; i < c.closed.size(); ++i) {
                    const double p = c.closed[i];
                    const double diff = std::abs(mc->estimate[i] - p);
                    double z;
                    if (c.forced)
                        z = diff == 0 ? 0 : INFINITY;
                    else
                        z = (diff - 0.5 / n) / std::max(std::sqrt(p * (1 - p) / n), 1 / n);
                    z = std::max(z, 0.0);
                    if (z > worst) {
                        worst = z;
                        worst_db = sc.gamma_bar_grid_db[i];
                    }
                    ok = ok && z <= kSigmaBand;
                }
                std::string detail = "worst |closed - MC| / sigma at " + fmt(worst_db) + " dB";
                if (c.forced)
                    detail = "a_th <= 0: closed form and MC both identically 1";
                report.add({base + ".concordance", ok, worst, detail});

                // closed forms never increase with gamma_bar
                bool mono = true;
                for (std::size_t i = 1; i < c.closed.size(); ++i)
                    mono = mono && c.closed[i] <= c.closed[i - 1] * (1 + 1e-12);
                report.add({base + ".monotone", mono, 0, "closed form non-increasing in gamma_bar"});
            }
        }
    }

    // nested thresholds give nested outage events
    std::vector<double> th = sc.gamma_th_list;
    std::sort(th.begin(), th.end());
    for (const auto* r : [&] {
             std::vector<const SweepResult*> v;
             for (const auto& x : mc_results)
                 if (x.meta_value("gamma_th") == format_double(th.front()))
                     v.push_back(&x);
             return v;
         }()) {
        bool ok = true;
        const SweepResult* prev = r;
        for (std::size_t k = 1; k < th.size(); ++k) {
            const SweepResult* next =
                find(mc_results, r->metric, r->user, r->meta_value("scheme"), format_double(th[k]));
            for (std::size_t i = 0; i < r->estimate.size(); ++i)
                ok = ok && prev->estimate[i] <= next->estimate[i];
            prev = next;
        }
        report.add({"op_" + r->user + "." + r->meta_value("scheme") + ".nested_thresholds", ok, 0,
                    "MC outage non-decreasing in gamma_th"});
    }
}

void slope_check(const RunConfig& cfg, const FtrSeries& sp, const FtrSeries& sq,
                 const Scheme& scheme, double gth, Report& report)
{
    std::vector<double> op_p, op_q;
    for (double db : kSlopeGridDb) {
        const LinkBudget b = budget_at(cfg, db);
        if (scheme.kind == Scheme::Kind::gpa) {
            const GpaScenario g{sp, sq, b, {scheme.a}};
            op_p.push_back(gpa::op_p(gth, g));
            op_q.push_back(gpa::op_q(gth, g));
        } else {
            const OpaScenario o{sp, sq, b, cfg.quad_nodes, cfg.quad_nodes};
            op_p.push_back(opa::op_p(gth, o));
            op_q.push_back(opa::op_q(gth, o));
        }
    }
    const bool forced = scheme.kind == Scheme::Kind::gpa && GpaConfig{scheme.a}.a_th(gth) <= 0;
    const double want_p = scheme.kind == Scheme::Kind::gpa ? -1 : -0.5;
    const double want_q = forced ? 0 : -1;
    const double tol_q = forced ? 0.02 : 0.05;
    const double slope_p = fit_loglog_slope(kSlopeGridDb, op_p);
    const double slope_q = fit_loglog_slope(kSlopeGridDb, op_q);
    const std::string base = scheme.name() + ".gth" + fmt(gth);
    report.add({"slope.op_p." + base, std::abs(slope_p - want_p) <= 0.05,
                std::abs(slope_p - want_p),
                "fitted " + fmt(slope_p) + " over 55-75 dB, expected " + fmt(want_p)});
    report.add({"slope.op_q." + base, std::abs(slope_q - want_q) <= tol_q,
                std::abs(slope_q - want_q),
                "fitted " + fmt(slope_q) + " over 55-75 dB, expected " + fmt(want_q)});
}

void slope_checks(const RunConfig& cfg, const FtrSeries& sp, const FtrSeries& sq, Report& report)
{
    for (const auto& scheme : cfg.scenario.schemes)
        if (scheme.kind != Scheme::Kind::tdma)
            for (double gth : cfg.scenario.gamma_th_list)
                slope_check(cfg, sp, sq, scheme, gth, report);
}

void capacity_checks(const RunConfig& cfg, const FtrSeries& sp, const FtrSeries& sq,
                     const std::vector<SweepResult>& mc_results, Report& report)
{
    const auto& sc = cfg.scenario;
    for (const auto& scheme : sc.schemes) {
        const SweepResult* mc = find(mc_results, Metric::ec, "sum", scheme.name());
        if (!mc)
            throw std::logic_error("validate: missing Monte Carlo capacity curve");
        const std::string base = "ec." + scheme.name();
        double worst_rel = 0;
        double worst_lo = 0;
        double worst_hi = 0;
        bool bounds_ok = true;
        bool approx_inside = true;
        for (std::size_t i = 0; i < sc.gamma_bar_grid_db.size(); ++i) {
            const LinkBudget b = budget_at(cfg, sc.gamma_bar_grid_db[i]);
            const double sim = mc->estimate[i];
            const double sigma = mc->ci_half_width(i) / stats::kZ95;
            double closed = 0;
            switch (scheme.kind) {
            case Scheme::Kind::gpa:
                closed = gpa::ec({sp, sq, b, {scheme.a}});
                break;
            case Scheme::Kind::tdma:
                closed = 0.5 * (gpa::ec_lambda(b.gamma_bar * b.q_p, sp) +
                                gpa::ec_lambda(b.gamma_bar * b.q_q, sq));
                break;
            case Scheme::Kind::opa: {
                const auto t = opa::capacity_terms({sp, sq, b, cfg.quad_nodes, cfg.quad_nodes});
                closed = t.i8_approx - t.i9;
                const double lo = t.i8_lower - t.i9;
                const double hi = t.i8_upper - t.i9;
                worst_lo = std::max(worst_lo, lo - (sim + kSigmaBand * sigma));
                worst_hi = std::max(worst_hi, (sim - kSigmaBand * sigma) - hi);
                bounds_ok = bounds_ok && lo <= sim + kSigmaBand * sigma &&
                            hi >= sim - kSigmaBand * sigma;
                approx_inside = approx_inside && lo <= closed && closed <= hi;
                break;
            }
            }
            worst_rel = std::max(worst_rel, std::abs(closed - sim) / sim);
        }
        const double limit = scheme.kind == Scheme::Kind::opa ? 0.02 : 0.01;
        report.add({base + ".concordance", worst_rel <= limit, worst_rel,
                    "worst relative gap to MC, limit " + fmt(limit)});
        if (scheme.kind == Scheme::Kind::opa) {
            report.add({base + ".bounds_bracket_mc", bounds_ok, std::max(worst_lo, worst_hi),
                        "lower <= MC + 3 sigma and upper >= MC - 3 sigma"});
            report.add({base + ".bounds_bracket_approx", approx_inside, 0,
                        "lower <= approximation <= upper"});
        }
    }
}

}  // namespace

bool Report::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string Report::format() const
{
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& c : checks) {
        failed += !c.pass;
        os << (c.pass ? "PASS " : "FAIL ") << c.name << " margin=" << fmt(c.margin) << "  "
           << c.detail << "\n";
    }
    os << (failed == 0 ? "PASS" : "FAIL") << ": " << checks.size() - failed << "/"
       << checks.size() << " checks passed\n";
    return os.str();
}

double fit_loglog_slope(const std::vector<double>& gamma_bar_db, const std::vector<double>& y)
{
    if (gamma_bar_db.size() != y.size() || y.size() < 2)
        throw DomainError("fit_loglog_slope: need two or more matching points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!(y[i] > 0))
            throw DomainError("fit_loglog_slope: values must be positive");
        const double x = gamma_bar_db[i] / 10;
        const double v = std::log10(y[i]);
        sx += x;
        sy += v;
        sxx += x * x;
        sxy += x * v;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Report validate_scenario(const RunConfig& cfg)
{
    cfg.validate();
    if (!cfg.has(AnalysisKind::closed_form) || !cfg.has(AnalysisKind::monte_carlo))
        throw ConfigError("output.analysis", 0,
                          "validate needs both closed_form and monte_carlo");
    Report report;
    const FtrSeries sp = ftr::build_series(cfg.scenario.user_p, cfg.n_terms);
    const FtrSeries sq = ftr::build_series(cfg.scenario.user_q, cfg.n_terms);
    series_checks("user_p", sp, report);
    series_checks("user_q", sq, report);

    outage_checks(cfg, sp, sq, mc::simulate_op(cfg.scenario), report);
    slope_checks(cfg, sp, sq, report);
    capacity_checks(cfg, sp, sq, mc::simulate_ec(cfg.scenario), report);
    return report;
}

}  // namespace nomaftr
