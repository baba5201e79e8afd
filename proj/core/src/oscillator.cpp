#include "fracschrod/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracschrod/quadrature.hpp"

namespace fracschrod {

double series_ratio(int n, double eps, double g) {
    const double nd = n;
    return (2.0 * nd + 1.0 + 0.25 * g * g - 2.0 * eps) / ((nd + 1.0) * (nd + 2.0));
}

double oscillator_level(int n, double g) { return n + 0.5 + g * g / 8.0; }

OscillatorSpectrum quantize_oscillator(const PhysicalParams& params, Convention convention,
                                       int n_max) {
    if (n_max < 0) throw std::invalid_argument("quantize_oscillator: n_max must be >= 0");
    const auto scales = derive_scales(params, convention);
    OscillatorSpectrum s;
    s.convention = convention;
    for (int n = 0; n <= n_max; ++n) {
        const double eps = oscillator_level(n, scales.g);
        s.levels.push_back({n, eps, params.hbar * params.omega * eps});
    }
    return s;
}

double PnPolynomial::operator()(double mu) const {
    const long double m2 = static_cast<long double>(mu) * mu;
    long double acc = 0.0L;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * m2 + it->convert_to<long double>();
    }
    return static_cast<double>(acc);
}

BigInt PnPolynomial::exact(const BigInt& mu) const {
    const BigInt m2 = mu * mu;
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * m2 + *it;
    return acc;
}

PnPolynomial pn_polynomial(int n) {
    if (n < 0) throw std::invalid_argument("pn_polynomial: n must be >= 0");
    PnPolynomial p{0, {BigInt(1)}};
    BigInt factorial = 1;
    BigInt power_of_two = 1;
    for (int j = 1; j <= n; ++j) {
        factorial *= j;
        power_of_two *= 2;
        std::vector<BigInt> next(static_cast<std::size_t>(j) + 1);
        next.front() = factorial;
        next.back() = power_of_two;
        const BigInt j2 = BigInt(j) * j;
        for (int k = 1; k <= j - 1; ++k) {
            BigInt numerator = j2 * p.coeffs[static_cast<std::size_t>(k)];
            const BigInt divisor = j - k;
            if (numerator % divisor != 0) {
                throw std::logic_error("pn_polynomial: inexact division in coefficient recursion");
            }
            next[static_cast<std::size_t>(k)] = numerator / divisor;
        }
        p = {j, std::move(next)};
    }
    return p;
}

double pn_oracle(int n, double mu) {
    if (n < 0 || n > 30) throw std::invalid_argument("pn_oracle: need 0 <= n <= 30");
    const auto rule = gauss_hermite(static_cast<std::size_t>(n) + 5);
    const double integral = rule.integrate([&](double t) {
        const double h = hermite(n, t - mu);
        return h * h;
    });
    return integral / (std::ldexp(1.0, n) * std::sqrt(std::numbers::pi));
}

double osc_normalization(const PhysicalParams& params, int n, double mu) {
    params.validate();
    if (n < 0) throw std::invalid_argument("osc_normalization: n must be >= 0");
    const double base = std::pow(params.mass * params.omega / (params.hbar * std::numbers::pi), 0.25);
    return base * std::pow(2.0, -0.5 * n) / std::sqrt(pn_polynomial(n)(mu));
}

double OscEigenfunction::operator()(double x) const {
    const double y = b * x;
    const double s = y + mu;
    return amplitude * hermite(n, y) * std::exp(-0.5 * s * s);
}

double OscEigenfunction::derivative(double x) const {
    const double y = b * x;
    const double s = y + mu;
    const double dh = n == 0 ? 0.0 : 2.0 * n * hermite(n - 1, y);
    return amplitude * b * (dh - s * hermite(n, y)) * std::exp(-0.5 * s * s);
}

double OscEigenfunction::norm_squared() const {
    const auto rule = gauss_hermite(static_cast<std::size_t>(n) + 5);
    const double integral = rule.integrate([&](double t) {
        const double h = hermite(n, t - mu);
        return h * h;
    });
    return amplitude * amplitude * integral / b;
}

OscEigenfunction osc_eigenfunction(const PhysicalParams& params, double mu, int n) {
    const double b = std::sqrt(params.mass * params.omega / params.hbar);
    return {n, mu, osc_normalization(params, n, mu), b};
}

OscEigenfunction osc_eigenfunction(const PhysicalParams& params, Convention convention, int n) {
    return osc_eigenfunction(params, derive_scales(params, convention).mu, n);
}

WaveSample osc_eigenfunction(const PhysicalParams& params, Convention convention, int n,
                             const GridSpec& grid) {
    const auto psi = osc_eigenfunction(params, convention, n);
    return WaveSample::sample(grid, [&](double x) { return complex{psi(x), 0.0}; });
}

double oscillator_residual(int n, double g, const GridSpec& y_grid) {
    const double mu = 0.5 * g;
    const double eps = oscillator_level(n, g);
    const double h = y_grid.step();
    const double amplitude = std::pow(std::numbers::pi, -0.25) * std::pow(2.0, -0.5 * n) /
                             std::sqrt(pn_polynomial(n)(mu));
    auto psi = [&](double y) {
        const double s = y + mu;
        return amplitude * hermite(n, y) * std::exp(-0.5 * s * s);
    };
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < y_grid.size(); ++i) {
        const double y = y_grid.x(i);
        const double m2 = psi(y - 2.0 * h), m1 = psi(y - h), mid = psi(y), p1 = psi(y + h), p2 = psi(y + 2.0 * h);
        const double d2 = (-m2 + 16.0 * m1 - 30.0 * mid + 16.0 * p1 - p2) / (12.0 * h * h);
        const double d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
        worst = std::max(worst, std::abs(d2 + g * d1 + (2.0 * eps - y * y) * mid));
    }
    return worst;
}

GridSpec oscillator_grid(const DerivedScales& scales, std::size_t n_points, double half_width) {
    const double centre = -scales.mu / scales.b;
    const double w = half_width / scales.b;
    return {centre - w, centre + w, n_points};
}

}  // namespace fracschrod
