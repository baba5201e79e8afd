#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace fracschrod {

using complex = std::complex<double>;

/// Uniform grid over [x_min, x_max], endpoints included.
class GridSpec {
public:
    /// Throws std::invalid_argument unless x_max > x_min and n_points >= 16.
    GridSpec(double x_min, double x_max, std::size_t n_points);

    [[nodiscard]] double x_min() const { return x_min_; }
    [[nodiscard]] double x_max() const { return x_max_; }
    [[nodiscard]] std::size_t size() const { return n_points_; }
    [[nodiscard]] double step() const { return (x_max_ - x_min_) / static_cast<double>(n_points_ - 1); }

    /// The last node is exactly x_max.
    [[nodiscard]] double x(std::size_t i) const;
    [[nodiscard]] std::vector<double> points() const;

    /// Same interval, half the step.
    [[nodiscard]] GridSpec refined() const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    double x_min_;
    double x_max_;
    std::size_t n_points_;
};

/// A wavefunction sampled on a uniform grid.
struct WaveSample {
    double x0 = 0.0;
    double dx = 1.0;
    std::vector<complex> values;

    [[nodiscard]] std::size_t size() const { return values.size(); }
    [[nodiscard]] double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
    [[nodiscard]] bool same_grid(const WaveSample& other) const;

    static WaveSample sample(const GridSpec& grid, const std::function<complex(double)>& f);
};

/// max_i |a_i - b_i|; throws on grid mismatch.
double sup_distance(const WaveSample& a, const WaveSample& b);

}  // namespace fracschrod
