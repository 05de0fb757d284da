// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nomaftr/ftr.hpp"

namespace nomaftr::ftr::detail {

struct CoefficientTerm {
    double ln_d = 0;
    //! estimated relative rounding error of d_j
    double relative_error = 0;
};

CoefficientTerm ln_coefficient(int j, const FtrParams& params);

}  // namespace nomaftr::ftr::detail
