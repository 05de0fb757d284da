// SPDX-License-Identifier: Apache-2.0
#include "nomaftr/runner.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "nomaftr/analysis_gpa.hpp"
#include "nomaftr/analysis_opa.hpp"
#include "nomaftr/error.hpp"
#include "nomaftr/montecarlo.hpp"
#include "nomaftr/svg_plot.hpp"

namespace nomaftr {
namespace {

namespace fs = std::filesystem;

std::string short_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

struct Series {
    FtrSeries p;
    FtrSeries q;
};

LinkBudget budget_at(const RunConfig& cfg, double db)
{
    LinkBudget b = cfg.scenario.budget;
    b.gamma_bar = noma::db_to_linear(db);
    return b;
}

SweepResult analytic(const RunConfig& cfg, Metric metric, const std::string& kind,
                     const std::string& user, const Scheme& scheme)
{
    SweepResult r;
    r.axis = cfg.scenario.gamma_bar_grid_db;
    r.metric = metric;
    r.kind = kind;
    r.user = user;
    r.set_meta("scheme", scheme.name());
    if (scheme.kind == Scheme::Kind::gpa)
        r.set_meta("a", format_double(scheme.a));
    r.set_meta("terms", std::to_string(cfg.n_terms));
    r.set_meta("scenario", cfg.scenario.fingerprint());
    return r;
}

void push_point(SweepResult& r, double v)
{
    r.estimate.push_back(v);
    r.ci_lo.push_back(v);
    r.ci_hi.push_back(v);
}

void outage_curves(const RunConfig& cfg, const Series& s, std::vector<SweepResult>& out)
{
    const auto& sc = cfg.scenario;
    for (const auto& scheme : sc.schemes) {
        if (scheme.kind == Scheme::Kind::tdma)
            continue;
        for (double gth : sc.gamma_th_list) {
            for (int user = 0; user < 2; ++user) {
                const Metric metric = user == 0 ? Metric::op_p : Metric::op_q;
                const std::string name = user == 0 ? "p" : "q";
                SweepResult cf = analytic(cfg, metric, "closed_form", name, scheme);
                SweepResult as = analytic(cfg, metric, "asymptotic", name, scheme);
                for (double db : sc.gamma_bar_grid_db) {
                    const LinkBudget b = budget_at(cfg, db);
                    if (scheme.kind == Scheme::Kind::gpa) {
                        const GpaScenario g{s.p, s.q, b, {scheme.a}};
                        if (cfg.has(AnalysisKind::closed_form))
                            push_point(cf, user == 0 ? gpa::op_p(gth, g) : gpa::op_q(gth, g));
                        if (cfg.has(AnalysisKind::asymptotic))
                            push_point(as, user == 0 ? gpa::op_p_asymptotic(gth, g)
                                                     : gpa::op_q_asymptotic(gth, g));
                    } else {
                        const OpaScenario o{s.p, s.q, b, cfg.quad_nodes, cfg.quad_nodes};
                        if (cfg.has(AnalysisKind::closed_form))
                            push_point(cf, user == 0 ? opa::op_p(gth, o) : opa::op_q(gth, o));
                        if (cfg.has(AnalysisKind::asymptotic))
                            push_point(as, user == 0 ? opa::op_p_asymptotic(gth, o)
                                                     : opa::op_q_asymptotic(gth, o));
                    }
                }
                for (SweepResult* r : {&cf, &as})
                    if (!r->estimate.empty()) {
                        r->set_meta("gamma_th", format_double(gth));
                        if (r == &as) {
                            // the high-SNR forms are not probabilities; keep them in range
                            for (auto* v : {&r->estimate, &r->ci_lo, &r->ci_hi})
                                for (double& x : *v)
                                    x = std::min(x, 1.0);
                        }
                        out.push_back(std::move(*r));
                    }
            }
        }
    }
}

void rate_curves(const RunConfig& cfg, const Series& s, Metric metric,
                 std::vector<SweepResult>& out)
{
    const auto& sc = cfg.scenario;
    for (const auto& scheme : sc.schemes) {
        SweepResult cf = analytic(cfg, metric, "closed_form", "sum", scheme);
        SweepResult lo = analytic(cfg, metric, "lower", "sum", scheme);
        SweepResult hi = analytic(cfg, metric, "upper", "sum", scheme);
        for (double db : sc.gamma_bar_grid_db) {
            const LinkBudget b = budget_at(cfg, db);
            switch (scheme.kind) {
            case Scheme::Kind::gpa:
                if (cfg.has(AnalysisKind::closed_form))
                    push_point(cf, gpa::ec({s.p, s.q, b, {scheme.a}}));
                break;
            case Scheme::Kind::opa: {
                const OpaScenario o{s.p, s.q, b, cfg.quad_nodes, cfg.quad_nodes};
                if (cfg.has(AnalysisKind::closed_form) || cfg.has(AnalysisKind::bounds)) {
                    const auto t = opa::capacity_terms(o);
                    if (cfg.has(AnalysisKind::closed_form))
                        push_point(cf, std::max(0.0, t.i8_approx - t.i9));
                    if (cfg.has(AnalysisKind::bounds)) {
                        push_point(lo, std::max(0.0, t.i8_lower - t.i9));
                        push_point(hi, std::max(0.0, t.i8_upper - t.i9));
                    }
                }
                break;
            }
            case Scheme::Kind::tdma:
                if (cfg.has(AnalysisKind::closed_form))
                    push_point(cf, 0.5 * (gpa::ec_lambda(b.gamma_bar * b.q_p, s.p) +
                                          gpa::ec_lambda(b.gamma_bar * b.q_q, s.q)));
                break;
            }
        }
        for (SweepResult* r : {&cf, &lo, &hi})
            if (!r->estimate.empty())
                out.push_back(std::move(*r));
    }
}

std::string scheme_title(const SweepResult& r)
{
    std::string s = r.meta_value("scheme");
    if (!r.meta_value("a").empty())
        s += " a=" + short_double(std::stod(r.meta_value("a")));
    return s;
}

// op_p / op_q already name the user
std::string metric_user(const SweepResult& r)
{
    if (r.metric == Metric::op_p || r.metric == Metric::op_q)
        return to_string(r.metric);
    return to_string(r.metric) + "_" + r.user;
}

std::string plot_key(const SweepResult& r)
{
    std::string key = metric_user(r);
    if (!r.meta_value("gamma_th").empty())
        key += "_gth" + short_double(std::stod(r.meta_value("gamma_th")));
    return key;
}

std::string wide_table(const std::vector<SweepResult>& results, const RunConfig& cfg)
{
    // one column triple per scheme; prefer Monte Carlo, fall back to closed form
    std::vector<const SweepResult*> columns;
    for (const auto& scheme : cfg.scenario.schemes) {
        const SweepResult* pick = nullptr;
        for (const auto& r : results)
            if (r.meta_value("scheme") == scheme.name() && r.user == "sum" &&
                (r.kind == "monte_carlo" || (!pick && r.kind == "closed_form")))
                pick = &r;
        if (pick)
            columns.push_back(pick);
    }
    std::ostringstream os;
    os << "# seed=" << cfg.scenario.seed << "\n";
    os << "# samples=" << cfg.scenario.n_samples << "\n";
    os << "# scenario=" << cfg.scenario.fingerprint() << "\n";
    os << "gamma_bar_db";
    for (const auto* c : columns) {
        const std::string n = c->meta_value("scheme");
        os << "," << n << "," << n << "_ci_lo," << n << "_ci_hi";
    }
    os << "\n";
    for (std::size_t i = 0; i < cfg.scenario.gamma_bar_grid_db.size(); ++i) {
        os << format_double(cfg.scenario.gamma_bar_grid_db[i]);
        for (const auto* c : columns)
            os << "," << format_double(c->estimate[i]) << "," << format_double(c->ci_lo[i]) << ","
               << format_double(c->ci_hi[i]);
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string result_stem(const SweepResult& r)
{
    std::string stem = metric_user(r) + "_" + r.meta_value("scheme") + "_" + r.kind;
    if (!r.meta_value("gamma_th").empty())
        stem += "_gth" + short_double(std::stod(r.meta_value("gamma_th")));
    return stem;
}

void write_file(const std::string& path, const std::string& text)
{
    const fs::path p(path);
    if (p.has_parent_path())
        fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

std::vector<SweepResult> compute_sweep(const RunConfig& cfg, Command command)
{
    cfg.validate();
    std::vector<SweepResult> out;
    const bool analytic_wanted = cfg.has(AnalysisKind::closed_form) ||
                                 cfg.has(AnalysisKind::asymptotic) ||
                                 cfg.has(AnalysisKind::bounds);
    if (analytic_wanted) {
        const Series s{ftr::build_series(cfg.scenario.user_p, cfg.n_terms),
                       ftr::build_series(cfg.scenario.user_q, cfg.n_terms)};
        if (command == Command::op)
            outage_curves(cfg, s, out);
        else
            rate_curves(cfg, s, command == Command::ec ? Metric::ec : Metric::sum_rate, out);
    }
    if (cfg.has(AnalysisKind::monte_carlo)) {
        std::vector<SweepResult> mc_results;
        switch (command) {
        case Command::op:
            mc_results = mc::simulate_op(cfg.scenario);
            break;
        case Command::ec:
            mc_results = mc::simulate_ec(cfg.scenario);
            break;
        case Command::sumrate:
            mc_results = mc::simulate_sum_rate(cfg.scenario);
            break;
        }
        for (auto& r : mc_results)
            out.push_back(std::move(r));
    }
    return out;
}

SweepOutput run_sweep(const RunConfig& cfg, Command command)
{
    SweepOutput output;
    output.results = compute_sweep(cfg, command);
    const fs::path dir(cfg.output_dir);
    try {
        for (const auto& r : output.results) {
            const std::string path = (dir / (result_stem(r) + ".csv")).string();
            write_file(path, emit_csv(r));
            output.files.push_back(path);
        }
        if (command == Command::sumrate) {
            const std::string path = (dir / "sum_rate_schemes.csv").string();
            write_file(path, wide_table(output.results, cfg));
            output.files.push_back(path);
        }
        if (cfg.emit_plots) {
            std::map<std::string, plot::Figure> figures;
            for (const auto& r : output.results) {
                auto& fig = figures[plot_key(r)];
                const bool outage = r.metric == Metric::op_p || r.metric == Metric::op_q;
                fig.log_y = outage;
                fig.x_label = "average transmit SNR (dB)";
                fig.y_label = outage ? "outage probability" : "bits/s/Hz";
                fig.title = plot_key(r);
                plot::Series s;
                s.label = scheme_title(r) + " " + r.kind;
                s.x = r.axis;
                s.y = r.estimate;
                s.markers = r.kind == "monte_carlo";
                s.group = scheme_title(r);
                s.dashed = r.kind != "closed_form" && !s.markers;
                if (s.markers) {
                    s.lo = r.ci_lo;
                    s.hi = r.ci_hi;
                }
                fig.series.push_back(std::move(s));
            }
            for (const auto& [key, fig] : figures) {
                const std::string path = (dir / (key + ".svg")).string();
                write_file(path, plot::render_svg(fig));
                output.files.push_back(path);
            }
        }
    } catch (...) {
        std::error_code ec;
        for (const auto& f : output.files)
            fs::remove(f, ec);
        throw;
    }
    return output;
}

}  // namespace nomaftr
