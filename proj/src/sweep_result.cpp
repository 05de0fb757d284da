// SPDX-License-Identifier: Apache-2.0
#include "nomaftr/sweep_result.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "nomaftr/error.hpp"

namespace nomaftr {

std::string to_string(Metric metric)
{
    switch (metric) {
    case Metric::op_p:
        return "op_p";
    case Metric::op_q:
        return "op_q";
    case Metric::ec:
        return "ec";
    case Metric::sum_rate:
        return "sum_rate";
    }
    return "?";
}

Metric metric_from_string(const std::string& name)
{
    for (Metric m : {Metric::op_p, Metric::op_q, Metric::ec, Metric::sum_rate})
        if (to_string(m) == name)
            return m;
    throw DomainError("unknown metric '" + name + "'");
}

std::string SweepResult::meta_value(const std::string& key) const
{
    for (const auto& [k, v] : meta)
        if (k == key)
            return v;
    return {};
}

void SweepResult::set_meta(const std::string& key, const std::string& value)
{
    for (auto& [k, v] : meta)
        if (k == key) {
            v = value;
            return;
        }
    meta.emplace_back(key, value);
}

void SweepResult::validate() const
{
    const auto n = axis.size();
    if (estimate.size() != n || ci_lo.size() != n || ci_hi.size() != n)
        throw DomainError("SweepResult: estimate and interval lists must match the axis");
    if (metric == Metric::op_p || metric == Metric::op_q)
        for (double v : estimate)
            if (!(v >= 0 && v <= 1))
                throw DomainError("SweepResult: outage estimate outside [0, 1]");
}

std::string format_double(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& text)
{
    double value = 0;
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (res.ec != std::errc() || res.ptr != end)
        throw DomainError("CSV: cannot parse number '" + text + "'");
    return value;
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, sep))
        out.push_back(field);
    if (!line.empty() && line.back() == sep)
        out.emplace_back();
    return out;
}

const char* kHeader = "gamma_bar_db,value,ci_lo,ci_hi,kind,user,metric";

}  // namespace

std::string emit_csv(const SweepResult& result)
{
    result.validate();
    std::ostringstream os;
    for (const auto& [k, v] : result.meta)
        os << "# " << k << "=" << v << "\n";
    os << kHeader << "\n";
    const std::string metric = to_string(result.metric);
    for (std::size_t i = 0; i < result.axis.size(); ++i)
        os << format_double(result.axis[i]) << "," << format_double(result.estimate[i]) << ","
           << format_double(result.ci_lo[i]) << "," << format_double(result.ci_hi[i]) << ","
           << result.kind << "," << result.user << "," << metric << "\n";
    return os.str();
}

SweepResult parse_csv(const std::string& text)
{
    SweepResult out;
    std::istringstream is(text);
    std::string line;
    bool header = false;
    bool first_row = true;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        if (line.rfind("# ", 0) == 0) {
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw DomainError("CSV: meta line without '=': " + line);
            out.meta.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
            continue;
        }
        if (!header) {
            if (line != kHeader)
                throw DomainError("CSV: unexpected header '" + line + "'");
            header = true;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 7)
            throw DomainError("CSV: expected 7 fields in '" + line + "'");
        out.axis.push_back(parse_double(f[0]));
        out.estimate.push_back(parse_double(f[1]));
        out.ci_lo.push_back(parse_double(f[2]));
        out.ci_hi.push_back(parse_double(f[3]));
        const Metric metric = metric_from_string(f[6]);
        if (first_row) {
            out.kind = f[4];
            out.user = f[5];
            out.metric = metric;
            first_row = false;
        } else if (f[4] != out.kind || f[5] != out.user || metric != out.metric) {
            throw DomainError("CSV: kind, user and metric must be constant within a file");
        }
    }
    if (!header)
        throw DomainError("CSV: missing header");
    out.validate();
    return out;
}

}  // namespace nomaftr
