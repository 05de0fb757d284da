// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "nomaftr/config.hpp"

namespace nomaftr {

struct Check {
    std::string name;
    bool pass = false;
    double margin = 0;   //!< check-specific slack; for MC concordance the worst |z|
    std::string detail;
};

struct Report {
    std::vector<Check> checks;
    bool passed() const;
    //! One "PASS|FAIL name margin=... detail" line per check plus a summary line.
    std::string format() const;
    void add(Check check) { checks.push_back(std::move(check)); }
};

//! Least-squares slope of log10(y) against gamma_bar_db / 10.
double fit_loglog_slope(const std::vector<double>& gamma_bar_db, const std::vector<double>& y);

/*!
 * Closed forms against Monte Carlo on the config grid, plus series invariants,
 * orderings and high-SNR slopes. Throws TruncationError or ConvergenceError when
 * the series cannot be built; ConfigError unless closed_form and monte_carlo are
 * both selected.
 */
Report validate_scenario(const RunConfig& config);

}  // namespace nomaftr
