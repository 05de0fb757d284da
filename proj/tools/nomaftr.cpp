// SPDX-License-Identifier: Apache-2.0
// Command-line front end: sweeps, validation and raw channel draws.
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nomaftr/config.hpp"
#include "nomaftr/error.hpp"
#include "nomaftr/montecarlo.hpp"
#include "nomaftr/runner.hpp"
#include "nomaftr/validation.hpp"

namespace {

using namespace nomaftr;

enum Exit { ok = 0, config_error = 1, numeric_error = 2, acceptance_failure = 3 };

struct Overrides {
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    int terms = 0;
    bool plots = false;
};

void add_common(CLI::App* sub, Overrides& o)
{
    sub->add_option("--config", o.config_path, "scenario file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", o.out_dir, "output directory (overrides output.dir)");
    sub->add_option("--seed", o.seed, "random seed (overrides mc.seed)");
    sub->add_option("--samples", o.samples, "Monte Carlo samples (overrides mc.samples)");
    sub->add_option("--terms", o.terms, "series truncation (overrides output.terms)");
    sub->add_flag("--plots", o.plots, "also write SVG plots");
}

RunConfig load(const Overrides& o, const CLI::App& sub)
{
    RunConfig cfg = load_config(o.config_path);
    if (sub.count("--out"))
        cfg.output_dir = o.out_dir;
    if (sub.count("--seed"))
        cfg.scenario.seed = o.seed;
    if (sub.count("--samples")) {
        if (o.samples < 10'000)
            throw ConfigError("--samples", 0, "needs at least 10000 samples");
        cfg.scenario.n_samples = o.samples;
    }
    if (sub.count("--terms")) {
        if (o.terms < 1)
            throw ConfigError("--terms", 0, "must be a positive integer");
        cfg.n_terms = o.terms;
    }
    if (o.plots)
        cfg.emit_plots = true;
    cfg.validate();
    return cfg;
}

int run_command(Command command, const RunConfig& cfg)
{
    const SweepOutput out = run_sweep(cfg, command);
    for (const auto& f : out.files)
        std::cout << f << "\n";
    return Exit::ok;
}

int run_validate(const RunConfig& cfg)
{
    const Report report = validate_scenario(cfg);
    const std::string text = report.format();
    std::cout << text;
    write_file((std::filesystem::path(cfg.output_dir) / "validation_report.txt").string(), text);
    return report.passed() ? Exit::ok : Exit::acceptance_failure;
}

int run_sample(const RunConfig& cfg)
{
    const auto& sc = cfg.scenario;
    for (int user = 0; user < 2; ++user) {
        const FtrParams& params = user == 0 ? sc.user_p : sc.user_q;
        const auto draws = mc::draw_effective_gain(params, sc.antennas, sc.n_samples, sc.seed, user);
        std::ostringstream os;
        os << "# params=" << params.describe() << "\n# antennas=" << sc.antennas.transmit << "x"
           << sc.antennas.receive << "\n# seed=" << sc.seed << "\nh\n";
        for (double h : draws)
            os << format_double(h) << "\n";
        const std::string path = (std::filesystem::path(cfg.output_dir) /
                                  (user == 0 ? "samples_user_p.csv" : "samples_user_q.csv"))
                                     .string();
        write_file(path, os.str());
        std::cout << path << "\n";
    }
    return Exit::ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Outage and ergodic capacity of two-user NOMA over FTR fading"};
    app.require_subcommand(1);
    Overrides o;
    CLI::App* op = app.add_subcommand("op", "outage probability sweeps");
    CLI::App* ec = app.add_subcommand("ec", "ergodic capacity sweeps");
    CLI::App* sumrate = app.add_subcommand("sumrate", "mean sum rate per scheme");
    CLI::App* validate = app.add_subcommand("validate", "closed forms against Monte Carlo");
    CLI::App* sample = app.add_subcommand("sample", "raw effective channel gains");
    for (CLI::App* sub : {op, ec, sumrate, validate, sample})
        add_common(sub, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::config_error;
    }

    try {
        if (*op)
            return run_command(Command::op, load(o, *op));
        if (*ec)
            return run_command(Command::ec, load(o, *ec));
        if (*sumrate)
            return run_command(Command::sumrate, load(o, *sumrate));
        if (*validate)
            return run_validate(load(o, *validate));
        return run_sample(load(o, *sample));
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return Exit::config_error;
    } catch (const DomainError& e) {
        std::cerr << "invalid parameter: " << e.what() << "\n";
        return Exit::config_error;
    } catch (const TruncationError& e) {
        std::cerr << "truncation inadequate: " << e.what() << "\n";
        return Exit::numeric_error;
    } catch (const ConvergenceError& e) {
        std::cerr << "numeric convergence failure: " << e.what() << "\n";
        return Exit::numeric_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::config_error;
    }
}
