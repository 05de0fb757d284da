// SPDX-License-Identifier: Apache-2.0
#include "nomaftr/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace nomaftr::plot {
namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 200;
constexpr double kTop = 40;
constexpr double kBottom = 60;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '&':
            out += "&amp;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

struct Axis {
    double lo, hi;
    bool log;
    double pixel_lo, pixel_hi;

    double map(double v) const
    {
        const double a = log ? std::log10(lo) : lo;
        const double b = log ? std::log10(hi) : hi;
        const double t = ((log ? std::log10(v) : v) - a) / (b - a);
        return pixel_lo + t * (pixel_hi - pixel_lo);
    }
};

// 1, 2 or 5 times a power of ten, close to range / target
double nice_step(double range, int target)
{
    const double raw = range / target;
    const double decade = std::pow(10, std::floor(std::log10(raw)));
    for (double f : {1.0, 2.0, 5.0})
        if (raw <= f * decade)
            return f * decade;
    return 10 * decade;
}

std::vector<double> linear_ticks(double lo, double hi, int target)
{
    const double step = nice_step(hi - lo, target);
    std::vector<double> out;
    for (double v = std::ceil(lo / step - 1e-9) * step; v <= hi + 1e-9 * step; v += step)
        out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    return out;
}

bool usable(double v, bool log)
{
    return std::isfinite(v) && (!log || v > 0);
}

}  // namespace

std::string render_svg(const Figure& fig)
{
    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const auto& s : fig.series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!usable(s.y[i], fig.log_y) || !std::isfinite(s.x[i]))
                continue;
            x_min = std::min(x_min, s.x[i]);
            x_max = std::max(x_max, s.x[i]);
            y_min = std::min(y_min, s.y[i]);
            y_max = std::max(y_max, s.y[i]);
        }
    if (!std::isfinite(x_min)) {
        x_min = 0, x_max = 1, y_min = fig.log_y ? 0.1 : 0, y_max = 1;
    }
    if (x_max == x_min)
        x_max = x_min + 1;
    if (fig.log_y) {
        y_min = std::pow(10, std::floor(std::log10(y_min)));
        y_max = std::pow(10, std::ceil(std::log10(y_max)));
        if (y_max == y_min)
            y_max = y_min * 10;
    } else {
        const double step = nice_step(y_max - y_min + (y_max == y_min), 6);
        y_min = std::floor(y_min / step) * step;
        y_max = std::ceil(y_max / step) * step;
        if (y_max == y_min)
            y_max = y_min + step;
    }
    const Axis ax{x_min, x_max, false, kLeft, kWidth - kRight};
    const Axis ay{y_min, y_max, fig.log_y, kHeight - kBottom, kTop};

    std::ostringstream os;
    os.precision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
       << escape(fig.title) << "</text>\n";

    // grid and ticks
    for (double v : linear_ticks(x_min, x_max, 8)) {
        const double px = ax.map(v);
        os << "<line x1=\"" << px << "\" y1=\"" << kTop << "\" x2=\"" << px << "\" y2=\""
           << kHeight - kBottom << "\" stroke=\"#e0e0e0\"/>\n";
        os << "<text x=\"" << px << "\" y=\"" << kHeight - kBottom + 18
           << "\" text-anchor=\"middle\">" << v << "</text>\n";
    }
    std::vector<double> y_ticks;
    if (fig.log_y) {
        for (double e = std::log10(y_min); e <= std::log10(y_max) + 1e-9; e += 1)
            y_ticks.push_back(std::pow(10, e));
    } else {
        y_ticks = linear_ticks(y_min, y_max, 6);
    }
    for (double v : y_ticks) {
        const double py = ay.map(v);
        os << "<line x1=\"" << kLeft << "\" y1=\"" << py << "\" x2=\"" << kWidth - kRight
           << "\" y2=\"" << py << "\" stroke=\"#e0e0e0\"/>\n";
        os << "<text x=\"" << kLeft - 6 << "\" y=\"" << py + 4 << "\" text-anchor=\"end\">";
        if (fig.log_y)
            os << "1e" << std::lround(std::log10(v));
        else
            os << v;
        os << "</text>\n";
    }
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kWidth - kLeft - kRight
       << "\" height=\"" << kHeight - kTop - kBottom
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 18
       << "\" text-anchor=\"middle\">" << escape(fig.x_label) << "</text>\n";
    os << "<text transform=\"translate(18," << (kTop + kHeight - kBottom) / 2
       << ") rotate(-90)\" text-anchor=\"middle\">" << escape(fig.y_label) << "</text>\n";

    std::vector<std::string> groups;
    for (std::size_t k = 0; k < fig.series.size(); ++k) {
        const auto& s = fig.series[k];
        std::size_t slot = k;
        if (!s.group.empty()) {
            slot = std::find(groups.begin(), groups.end(), s.group) - groups.begin();
            if (slot == groups.size())
                groups.push_back(s.group);
        }
        const char* colour = kPalette[slot % std::size(kPalette)];
        const char* dash = s.dashed ? " stroke-dasharray=\"6,4\"" : "";
        if (s.markers) {
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if (!usable(s.y[i], fig.log_y))
                    continue;
                const double px = ax.map(s.x[i]);
                const double py = ay.map(s.y[i]);
                if (i < s.lo.size() && i < s.hi.size() && usable(s.lo[i], fig.log_y) &&
                    usable(s.hi[i], fig.log_y))
                    os << "<line x1=\"" << px << "\" y1=\"" << ay.map(s.lo[i]) << "\" x2=\"" << px
                       << "\" y2=\"" << ay.map(s.hi[i]) << "\" stroke=\"" << colour << "\"/>\n";
                os << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"3.5\" fill=\"none\" stroke=\""
                   << colour << "\"/>\n";
            }
        } else {
            os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.6\"" << dash
               << " points=\"";
            for (std::size_t i = 0; i < s.x.size(); ++i)
                if (usable(s.y[i], fig.log_y))
                    os << ax.map(s.x[i]) << "," << ay.map(s.y[i]) << " ";
            os << "\"/>\n";
        }
        const double ly = kTop + 14 + 18 * k;
        const double lx = kWidth - kRight + 12;
        if (s.markers)
            os << "<circle cx=\"" << lx + 10 << "\" cy=\"" << ly - 4 << "\" r=\"3.5\" fill=\"none\" stroke=\""
               << colour << "\"/>\n";
        else
            os << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 20 << "\" y2=\""
               << ly - 4 << "\" stroke=\"" << colour << "\" stroke-width=\"1.6\"" << dash << "/>\n";
        os << "<text x=\"" << lx + 26 << "\" y=\"" << ly << "\">" << escape(s.label) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace nomaftr::plot
