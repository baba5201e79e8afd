#pragma once

#include <string>
#include <vector>

namespace fracschrod {

struct Curve {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool steps = false;  // draw as a staircase
};

struct Axes {
    std::string title;
    std::string x_label;
    std::string y_label;
};

/// Standalone SVG: one polyline per curve, ticks on both axes, legend.
/// Same input gives the same bytes. Throws std::invalid_argument when there
/// are no curves, a curve is empty, x and y sizes differ or a value is not finite.
std::string render_svg(const std::vector<Curve>& curves, const Axes& axes);

}  // namespace fracschrod
