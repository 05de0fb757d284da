// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "nomaftr/config.hpp"
#include "nomaftr/sweep_result.hpp"

namespace nomaftr {

enum class Command { op, ec, sumrate };

struct SweepOutput {
    std::vector<SweepResult> results;
    std::vector<std::string> files;  //!< written paths, CSV first then plots
};

//! All curves a command produces for the config, without touching the filesystem.
std::vector<SweepResult> compute_sweep(const RunConfig& config, Command command);

//! compute_sweep plus CSV (and optional SVG) files in config.output_dir.
//! Files written before a failure are removed again.
SweepOutput run_sweep(const RunConfig& config, Command command);

//! Base file name of a curve, e.g. op_p_gpa_closed_form_gth10 or ec_sum_opa_lower.
std::string result_stem(const SweepResult& result);

//! Writes text to path, creating parent directories.
void write_file(const std::string& path, const std::string& text);

}  // namespace nomaftr
