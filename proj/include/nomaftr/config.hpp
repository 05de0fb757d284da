// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "nomaftr/montecarlo.hpp"

namespace nomaftr {

enum class AnalysisKind { closed_form, asymptotic, bounds, monte_carlo };

std::string to_string(AnalysisKind kind);

struct RunConfig {
    Scenario scenario;
    std::string output_dir = "out";
    bool emit_plots = false;
    std::vector<AnalysisKind> analyses{AnalysisKind::closed_form, AnalysisKind::monte_carlo};
    int n_terms = 80;
    int quad_nodes = 64;  //!< starting Chebyshev-Gauss nodes for the OPA terms

    bool has(AnalysisKind kind) const;
    //! Throws ConfigError naming the offending key.
    void validate() const;
};

/*!
 * Parses the sectioned key = value format documented in docs/config.md.
 * Throws ConfigError with the line and key of the first problem.
 */
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace nomaftr
