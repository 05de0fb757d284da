// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace nomaftr {

enum class Metric { op_p, op_q, ec, sum_rate };

std::string to_string(Metric metric);
//! Throws DomainError for unknown names.
Metric metric_from_string(const std::string& name);

//! One curve over the gamma_bar grid.
struct SweepResult {
    std::vector<double> axis;  //!< gamma_bar in dB
    Metric metric = Metric::op_p;
    std::string kind;  //!< closed_form, asymptotic, approx, lower, upper, monte_carlo
    std::string user;  //!< p, q or sum
    std::vector<double> estimate;
    std::vector<double> ci_lo;  //!< 95% interval; equal to estimate for analytic curves
    std::vector<double> ci_hi;
    //! Ordered key/value pairs: scheme, gamma_th, seed, samples, scenario fingerprint.
    std::vector<std::pair<std::string, std::string>> meta;

    double ci_half_width(std::size_t i) const { return 0.5 * (ci_hi[i] - ci_lo[i]); }
    //! Value of a meta key, or empty.
    std::string meta_value(const std::string& key) const;
    void set_meta(const std::string& key, const std::string& value);
    //! Throws DomainError when list lengths differ or OP values leave [0, 1].
    void validate() const;
    bool operator==(const SweepResult&) const = default;
};

//! CSV with "# key=value" meta lines ahead of the header.
std::string emit_csv(const SweepResult& result);
SweepResult parse_csv(const std::string& text);

//! 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

}  // namespace nomaftr
