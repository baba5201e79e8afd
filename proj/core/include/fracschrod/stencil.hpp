#pragma once

#include <span>
#include <vector>

#include "fracschrod/grid.hpp"

namespace fracschrod {

// Fourth-order finite differences on a uniform grid. Interior points use
// centered five-point stencils; the two nodes at each end use one-sided
// fourth-order stencils.

/// First derivative; needs at least 5 samples.
std::vector<complex> derivative(std::span<const complex> f, double h);
/// Second derivative; needs at least 6 samples.
std::vector<complex> second_derivative(std::span<const complex> f, double h);

WaveSample derivative(const WaveSample& f);
WaveSample second_derivative(const WaveSample& f);

}  // namespace fracschrod
