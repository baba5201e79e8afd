#include "fracschrod/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracschrod {

GridSpec::GridSpec(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_points_(n_points) {
    if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
        throw std::invalid_argument("grid requires finite x_max > x_min");
    }
    if (n_points < 16) {
        throw std::invalid_argument("grid requires at least 16 points");
    }
}

double GridSpec::x(std::size_t i) const {
    if (i + 1 == n_points_) return x_max_;
    return x_min_ + static_cast<double>(i) * step();
}

std::vector<double> GridSpec::points() const {
    std::vector<double> out(n_points_);
    for (std::size_t i = 0; i < n_points_; ++i) out[i] = x(i);
    return out;
}

GridSpec GridSpec::refined() const { return {x_min_, x_max_, 2 * (n_points_ - 1) + 1}; }

bool WaveSample::same_grid(const WaveSample& other) const {
    if (values.size() != other.values.size()) return false;
    const double tol = 1e-12 * std::max(1.0, std::abs(dx));
    return std::abs(x0 - other.x0) <= tol && std::abs(dx - other.dx) <= tol;
}

WaveSample WaveSample::sample(const GridSpec& grid, const std::function<complex(double)>& f) {
    WaveSample w;
    w.x0 = grid.x_min();
    w.dx = grid.step();
    w.values.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) w.values[i] = f(grid.x(i));
    return w;
}

double sup_distance(const WaveSample& a, const WaveSample& b) {
    if (!a.same_grid(b)) throw std::invalid_argument("sup_distance: grid mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    }
    return worst;
}

}  // namespace fracschrod
