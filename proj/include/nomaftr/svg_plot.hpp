// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace nomaftr::plot {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    //! Draw markers with error bars instead of a line.
    bool markers = false;
    std::vector<double> lo;
    std::vector<double> hi;
    //! Series with the same non-empty group share a colour.
    std::string group;
    bool dashed = false;
};

struct Figure {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_y = false;
    std::vector<Series> series;
};

//! Static SVG document; non-positive values are dropped on a log axis.
std::string render_svg(const Figure& figure);

}  // namespace nomaftr::plot
