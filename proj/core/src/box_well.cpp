#include "fracschrod/box_well.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracschrod/quadrature.hpp"

namespace fracschrod {

namespace {

void require_level(int n) {
    if (n < 1) throw std::invalid_argument("box level index must be >= 1");
}

// sin(pi t), exact zero at integer t.
double sin_pi(double t) {
    const double r = t - 2.0 * std::round(0.5 * t);
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    return std::sin(std::numbers::pi * r);
}

double cos_pi(double t) {
    const double r = t - 2.0 * std::round(0.5 * t);
    if (r == 0.5 || r == -0.5) return 0.0;
    return std::cos(std::numbers::pi * r);
}

}  // namespace

double box_zero_point(const PhysicalParams& params) {
    params.validate();
    const double m = params.mass;
    return m * m * m * params.c * params.c / (2.0 * params.damping * params.damping);
}

BoxSpectrum quantize_box(const PhysicalParams& params, int count) {
    params.validate();
    const double zero_point = box_zero_point(params);
    const double L = params.length;
    const double kinetic = params.hbar * params.hbar * std::numbers::pi * std::numbers::pi /
                           (2.0 * params.mass * L * L);
    BoxSpectrum s;
    s.levels.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int n = 1; n <= count; ++n) {
        const double nd = n;
        s.levels.push_back({n, 2.0 * std::numbers::pi * nd / L, zero_point + kinetic * nd * nd});
    }
    return s;
}

double box_normalization(double xi, double length, int n) {
    require_level(n);
    if (xi < 0.0 || !(length > 0.0)) throw std::invalid_argument("box_normalization: need xi >= 0, L > 0");
    const double z = xi * length;
    const double ratio = z / (2.0 * std::numbers::pi * n);
    if (z == 0.0) return std::sqrt(2.0 / length);
    const double e = std::exp(-z);
    // csch(z) = 2 e^{-z} / (1 - e^{-2z}); -expm1 keeps the small-z limit accurate.
    const double csch = 2.0 * e / -std::expm1(-2.0 * z);
    if (!std::isnormal(csch)) {
        throw std::domain_error("box_normalization: csch(xi L) underflows for xi L = " + std::to_string(z));
    }
    return std::sqrt(2.0 * xi * (ratio * ratio + 1.0) * csch);
}

double box_normalization(const PhysicalParams& params, int n) {
    return box_normalization(derive_scales(params, Convention::Reduced).xi, params.length, n);
}

double BoxEigenfunction::operator()(double x) const {
    const double half = 0.5 * length;
    if (x < -half || x > half) return 0.0;
    return amplitude * std::exp(-xi * x) * sin_pi(2.0 * n * (x / length));
}

double BoxEigenfunction::derivative(double x) const {
    const double half = 0.5 * length;
    if (x < -half || x > half) return 0.0;
    const double t = 2.0 * n * (x / length);
    return amplitude * std::exp(-xi * x) * (k * cos_pi(t) - xi * sin_pi(t));
}

BoxEigenfunction box_eigenfunction(double xi, double length, int n) {
    return {n, box_normalization(xi, length, n), xi, 2.0 * std::numbers::pi * n / length, length};
}

BoxEigenfunction box_eigenfunction(const PhysicalParams& params, int n) {
    return box_eigenfunction(derive_scales(params, Convention::Reduced).xi, params.length, n);
}

WaveSample box_eigenfunction(const PhysicalParams& params, int n, const GridSpec& grid) {
    const double half = 0.5 * params.length;
    if (grid.x_min() < -half || grid.x_max() > half) {
        throw std::invalid_argument("box_eigenfunction: grid extends outside [-L/2, L/2]");
    }
    const auto psi = box_eigenfunction(params, n);
    return WaveSample::sample(grid, [&](double x) { return complex{psi(x), 0.0}; });
}

BoxMomentum box_momentum_expectation(const PhysicalParams& params, int n) {
    const auto psi = box_eigenfunction(params, n);
    const double half = 0.5 * params.length;
    const double integral = gauss_legendre(
        [&](double x) { return psi(x) * psi.derivative(x); }, -half, half, 16 * static_cast<std::size_t>(n) + 32);
    const complex minus_i_hbar{0.0, -params.hbar};
    const double edge = 0.5 * (psi(half) * psi(half) - psi(-half) * psi(-half));
    return {minus_i_hbar * integral, minus_i_hbar * edge};
}

}  // namespace fracschrod
