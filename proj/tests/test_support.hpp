// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "nomaftr/ftr.hpp"

namespace testing {

inline double rel_err(double got, double want)
{
    return std::abs(got - want) / std::abs(want);
}

// Reference parameter sets 1-6, user p then user q.
inline const nomaftr::FtrParams kCase1p{10.8, 5, 0.5, 0.2887};
inline const nomaftr::FtrParams kCase1q{5.5, 10, 0.35, 0.2132};
inline const nomaftr::FtrParams kCase2p{5.5, 8, 0.35, 0.2981};
inline const nomaftr::FtrParams kCase2q{15.5, 5, 0.5, 0.3162};
inline const nomaftr::FtrParams kCase3p{5.5, 8, 0.1, 0.2357};
inline const nomaftr::FtrParams kCase3q{3.3, 10, 0.4, 0.2335};
inline const nomaftr::FtrParams kCase4p{15.5, 8, 0.35, 0.2357};
inline const nomaftr::FtrParams kCase4q{3.3, 15, 0.4, 0.1936};
inline const nomaftr::FtrParams kCase5p{10.8, 5, 0.5, 0.2887};
inline const nomaftr::FtrParams kCase5q{10.8, 5, 0.5, 0.2887};
inline const nomaftr::FtrParams kCase6p{3.5, 5, 0.5, 0.3162};
inline const nomaftr::FtrParams kCase6q{3.5, 5, 0.5, 0.2739};

// Capacity figure setting: user p of case 2 with unit-mean sigma, user q of case 2.
inline const nomaftr::FtrParams kCapacityP{5.5, 8, 0.35, 0.2357};
inline const nomaftr::FtrParams kCapacityQ{15.5, 5, 0.5, 0.3162};

}  // namespace testing
