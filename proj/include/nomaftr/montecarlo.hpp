// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "nomaftr/ftr.hpp"
#include "nomaftr/noma.hpp"
#include "nomaftr/sweep_result.hpp"

namespace nomaftr {

struct Antennas {
    int transmit = 1;
    int receive = 1;
    int links() const { return transmit * receive; }
    bool operator==(const Antennas&) const = default;
};

//! Simulation protocol; budget.gamma_bar is ignored in favour of the grid.
struct Scenario {
    FtrParams user_p;
    FtrParams user_q;
    LinkBudget budget;
    std::vector<Scheme> schemes{Scheme::gpa(0.2), Scheme::opa()};
    Antennas antennas;
    std::uint64_t n_samples = 10'000'000;
    std::uint64_t seed = 1;
    std::vector<double> gamma_th_list{1.0};
    std::vector<double> gamma_bar_grid_db{0, 5, 10, 15, 20, 25, 30};

    void validate() const;
    //! Compact parameter summary stored with every result.
    std::string fingerprint() const;
};

namespace mc {

//! Selection-combining gain: max over t*r independent FTR links.
//! user_index picks the substream family so the two users never share draws.
std::vector<double> draw_effective_gain(const FtrParams& params, const Antennas& antennas,
                                        std::uint64_t n, std::uint64_t seed, int user_index = 0);

//! Outage curves, one per (scheme, user, gamma_th); TDMA is skipped.
std::vector<SweepResult> simulate_op(const Scenario& scenario);
//! Mean sum rate of each scheme with a normal 95% interval, tagged as ergodic capacity.
std::vector<SweepResult> simulate_ec(const Scenario& scenario);
//! Same estimator tagged as sum rate.
std::vector<SweepResult> simulate_sum_rate(const Scenario& scenario);

}  // namespace mc
}  // namespace nomaftr
