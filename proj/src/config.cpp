// SPDX-License-Identifier: Apache-2.0
#include "nomaftr/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "nomaftr/error.hpp"

namespace nomaftr {

std::string to_string(AnalysisKind kind)
{
    switch (kind) {
    case AnalysisKind::closed_form:
        return "closed_form";
    case AnalysisKind::asymptotic:
        return "asymptotic";
    case AnalysisKind::bounds:
        return "bounds";
    case AnalysisKind::monte_carlo:
        return "monte_carlo";
    }
    return "?";
}

bool RunConfig::has(AnalysisKind kind) const
{
    return std::find(analyses.begin(), analyses.end(), kind) != analyses.end();
}

void RunConfig::validate() const
{
    if (analyses.empty())
        throw ConfigError("output.analysis", 0, "select at least one analysis kind");
    if (n_terms < 1)
        throw ConfigError("output.terms", 0, "must be a positive integer");
    if (quad_nodes < 8)
        throw ConfigError("output.quad_nodes", 0, "must be at least 8");
    if (output_dir.empty())
        throw ConfigError("output.dir", 0, "must not be empty");
    // the analytic results cover one antenna per link
    if (scenario.antennas.links() > 1 && (analyses.size() > 1 || !has(AnalysisKind::monte_carlo)))
        throw ConfigError("output.analysis", 0, "multi-antenna scenarios support monte_carlo only");
    try {
        scenario.validate();
    } catch (const DomainError& e) {
        throw ConfigError("", 0, e.what());
    }
}

namespace {

struct Entry {
    std::string value;
    std::size_t line;
};

using Section = std::map<std::string, Entry>;

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

const std::set<std::string> kSections{"user_p", "user_q", "link", "scheme",
                                      "sweep",  "mc",     "output"};
const std::map<std::string, std::set<std::string>> kKeys{
    {"user_p", {"m", "K", "delta", "sigma"}},
    {"user_q", {"m", "K", "delta", "sigma"}},
    {"link", {"q_p", "q_q"}},
    {"scheme", {"kinds", "gpa.a"}},
    {"sweep", {"gamma_bar_db", "gamma_th"}},
    {"mc", {"samples", "seed", "antennas"}},
    {"output", {"dir", "plots", "analysis", "terms", "quad_nodes"}},
};

class Reader {
  public:
    explicit Reader(std::map<std::string, Section> sections) : sections_(std::move(sections)) {}

    const Entry* find(const std::string& section, const std::string& key)
    {
        auto s = sections_.find(section);
        if (s == sections_.end())
            return nullptr;
        auto e = s->second.find(key);
        if (e == s->second.end())
            return nullptr;
        return &e->second;
    }

    const Entry& require(const std::string& section, const std::string& key)
    {
        if (const Entry* e = find(section, key))
            return *e;
        throw ConfigError(section + "." + key, 0, "required key is missing");
    }

    double number(const std::string& section, const std::string& key, const Entry& e)
    {
        return parse_number(e.value, section + "." + key, e.line);
    }

    static double parse_number(const std::string& text, const std::string& key, std::size_t line)
    {
        double v = 0;
        const auto* end = text.data() + text.size();
        const auto res = std::from_chars(text.data(), end, v);
        if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v))
            throw ConfigError(key, line, "expected a number, got '" + text + "'");
        return v;
    }

    static std::uint64_t parse_count(const std::string& text, const std::string& key,
                                     std::size_t line)
    {
        // accept integer literals and exact scientific forms such as 1e7
        const double v = parse_number(text, key, line);
        if (!(v >= 1) || v != std::floor(v) || v > 1e18)
            throw ConfigError(key, line, "expected a positive integer, got '" + text + "'");
        return static_cast<std::uint64_t>(v);
    }

    static std::vector<std::string> list(const std::string& text)
    {
        std::vector<std::string> out;
        std::istringstream is(text);
        std::string item;
        while (std::getline(is, item, ','))
            if (auto t = trim(item); !t.empty())
                out.push_back(t);
        return out;
    }

  private:
    std::map<std::string, Section> sections_;
};

FtrParams read_user(Reader& r, const std::string& section)
{
    FtrParams p;
    const Entry& m = r.require(section, "m");
    const Entry& k = r.require(section, "K");
    const Entry& d = r.require(section, "delta");
    const Entry& s = r.require(section, "sigma");
    p.m = r.number(section, "m", m);
    p.k = r.number(section, "K", k);
    p.delta = r.number(section, "delta", d);
    p.sigma = r.number(section, "sigma", s);
    if (!(p.m > 0))
        throw ConfigError(section + ".m", m.line, "must be positive");
    if (!(p.k >= 0))
        throw ConfigError(section + ".K", k.line, "must be non-negative");
    if (!(p.delta >= 0 && p.delta <= 1))
        throw ConfigError(section + ".delta", d.line, "must lie in [0, 1]");
    if (!(p.sigma > 0))
        throw ConfigError(section + ".sigma", s.line, "must be positive");
    return p;
}

// "start:step:stop" (inclusive) or a comma-separated list
std::vector<double> read_grid(const Entry& e, const std::string& key)
{
    std::vector<double> out;
    if (e.value.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::istringstream is(e.value);
        std::string item;
        while (std::getline(is, item, ':'))
            parts.push_back(trim(item));
        if (parts.size() != 3)
            throw ConfigError(key, e.line, "range must read start:step:stop");
        const double start = Reader::parse_number(parts[0], key, e.line);
        const double step = Reader::parse_number(parts[1], key, e.line);
        const double stop = Reader::parse_number(parts[2], key, e.line);
        if (!(step > 0) || stop < start)
            throw ConfigError(key, e.line, "range needs step > 0 and stop >= start");
        const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
        if (count > 100000)
            throw ConfigError(key, e.line, "range has too many points");
        for (long i = 0; i < count; ++i)
            out.push_back(start + i * step);
    } else {
        for (const auto& item : Reader::list(e.value))
            out.push_back(Reader::parse_number(item, key, e.line));
    }
    if (out.empty())
        throw ConfigError(key, e.line, "grid must not be empty");
    return out;
}

bool read_bool(const Entry& e, const std::string& key)
{
    if (e.value == "true" || e.value == "yes" || e.value == "1")
        return true;
    if (e.value == "false" || e.value == "no" || e.value == "0")
        return false;
    throw ConfigError(key, e.line, "expected true or false, got '" + e.value + "'");
}

}  // namespace

RunConfig parse_config(const std::string& text)
{
    std::map<std::string, Section> sections;
    std::istringstream is(text);
    std::string raw;
    std::string current;
    std::size_t line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("", line_no, "malformed section header '" + line + "'");
            current = trim(line.substr(1, line.size() - 2));
            if (!kSections.count(current))
                throw ConfigError(current, line_no, "unknown section");
            sections[current];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("", line_no, "expected 'key = value', got '" + line + "'");
        if (current.empty())
            throw ConfigError("", line_no, "key outside any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string full = current + "." + key;
        if (!kKeys.at(current).count(key))
            throw ConfigError(full, line_no, "unknown key");
        if (value.empty())
            throw ConfigError(full, line_no, "empty value");
        if (!sections[current].emplace(key, Entry{value, line_no}).second)
            throw ConfigError(full, line_no, "duplicate key");
    }

    Reader r(std::move(sections));
    RunConfig cfg;
    Scenario& sc = cfg.scenario;
    sc.user_p = read_user(r, "user_p");
    sc.user_q = read_user(r, "user_q");

    const Entry& qp = r.require("link", "q_p");
    const Entry& qq = r.require("link", "q_q");
    sc.budget.q_p = r.number("link", "q_p", qp);
    sc.budget.q_q = r.number("link", "q_q", qq);
    if (!(sc.budget.q_p > 0))
        throw ConfigError("link.q_p", qp.line, "must be positive");
    if (!(sc.budget.q_q > 0))
        throw ConfigError("link.q_q", qq.line, "must be positive");
    if (!(sc.budget.q_p > sc.budget.q_q))
        throw ConfigError("link.q_p", qp.line, "the near user needs q_p > q_q");

    double a = 0.2;
    std::size_t a_line = 0;
    if (const Entry* e = r.find("scheme", "gpa.a")) {
        a = r.number("scheme", "gpa.a", *e);
        a_line = e->line;
    }
    if (!(a > 0 && a < 0.5))
        throw ConfigError("gpa.a", a_line, "power fraction must satisfy 0 < a < 0.5");
    if (const Entry* e = r.find("scheme", "kinds")) {
        sc.schemes.clear();
        for (const auto& k : Reader::list(e->value)) {
            if (k == "gpa")
                sc.schemes.push_back(Scheme::gpa(a));
            else if (k == "opa")
                sc.schemes.push_back(Scheme::opa());
            else if (k == "tdma")
                sc.schemes.push_back(Scheme::tdma());
            else
                throw ConfigError("scheme.kinds", e->line, "unknown scheme '" + k + "'");
        }
        if (sc.schemes.empty())
            throw ConfigError("scheme.kinds", e->line, "select at least one scheme");
    } else {
        sc.schemes = {Scheme::gpa(a), Scheme::opa()};
    }

    sc.gamma_bar_grid_db = read_grid(r.require("sweep", "gamma_bar_db"), "sweep.gamma_bar_db");
    const Entry& th = r.require("sweep", "gamma_th");
    sc.gamma_th_list = read_grid(th, "sweep.gamma_th");
    for (double t : sc.gamma_th_list)
        if (!(t > 0))
            throw ConfigError("sweep.gamma_th", th.line, "thresholds must be positive");

    if (const Entry* e = r.find("mc", "samples")) {
        sc.n_samples = Reader::parse_count(e->value, "mc.samples", e->line);
        if (sc.n_samples < 10'000)
            throw ConfigError("mc.samples", e->line, "needs at least 10000 samples");
    }
    if (const Entry* e = r.find("mc", "seed")) {
        const auto* end = e->value.data() + e->value.size();
        const auto res = std::from_chars(e->value.data(), end, sc.seed);
        if (res.ec != std::errc() || res.ptr != end)
            throw ConfigError("mc.seed", e->line, "expected an unsigned integer");
    }
    if (const Entry* e = r.find("mc", "antennas")) {
        const auto x = e->value.find('x');
        if (x == std::string::npos)
            throw ConfigError("mc.antennas", e->line, "expected TxR, e.g. 2x2");
        const double t = Reader::parse_number(trim(e->value.substr(0, x)), "mc.antennas", e->line);
        const double rr = Reader::parse_number(trim(e->value.substr(x + 1)), "mc.antennas", e->line);
        if (t < 1 || rr < 1 || t != std::floor(t) || rr != std::floor(rr) || t * rr > 256)
            throw ConfigError("mc.antennas", e->line, "counts must be positive integers, at most 256 links");
        sc.antennas = {static_cast<int>(t), static_cast<int>(rr)};
    }

    if (const Entry* e = r.find("output", "dir"))
        cfg.output_dir = e->value;
    if (const Entry* e = r.find("output", "plots"))
        cfg.emit_plots = read_bool(*e, "output.plots");
    if (const Entry* e = r.find("output", "analysis")) {
        cfg.analyses.clear();
        for (const auto& k : Reader::list(e->value)) {
            bool known = false;
            for (auto kind : {AnalysisKind::closed_form, AnalysisKind::asymptotic,
                              AnalysisKind::bounds, AnalysisKind::monte_carlo})
                if (to_string(kind) == k) {
                    if (!cfg.has(kind))
                        cfg.analyses.push_back(kind);
                    known = true;
                }
            if (!known)
                throw ConfigError("output.analysis", e->line, "unknown analysis kind '" + k + "'");
        }
        if (cfg.analyses.empty())
            throw ConfigError("output.analysis", e->line, "select at least one analysis kind");
    }
    if (const Entry* e = r.find("output", "terms"))
        cfg.n_terms = static_cast<int>(Reader::parse_count(e->value, "output.terms", e->line));
    if (const Entry* e = r.find("output", "quad_nodes")) {
        cfg.quad_nodes = static_cast<int>(Reader::parse_count(e->value, "output.quad_nodes", e->line));
        if (cfg.quad_nodes < 8)
            throw ConfigError("output.quad_nodes", e->line, "must be at least 8");
    }

    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("", 0, "cannot open config file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str());
}

}  // namespace nomaftr
