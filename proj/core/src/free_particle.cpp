#include "fracschrod/free_particle.hpp"

#include <boost/math/tools/minima.hpp>

#include <cmath>
#include <utility>

namespace fracschrod {

CharacteristicRoots characteristic_roots(double xi, double kappa) {
    CharacteristicRoots r;
    r.discriminant = 4.0 * xi * xi - 4.0 * kappa;
    const double quarter = xi * xi - kappa;
    if (quarter < 0.0) {
        const double k = std::sqrt(-quarter);
        r.regime = Regime::UnderDamped;
        r.lambda1 = {-xi, k};
        r.lambda2 = {-xi, -k};
        return r;
    }
    if (quarter == 0.0) {
        r.regime = Regime::Critical;
        r.lambda1 = r.lambda2 = {-xi, 0.0};
        return r;
    }
    r.regime = Regime::OverDamped;
    // q carries no cancellation; the partner root follows from the product.
    const double sign = xi >= 0.0 ? 1.0 : -1.0;
    const double q = -(xi + sign * std::sqrt(quarter));
    double first = q;
    double second = kappa / q;
    if (first < second) std::swap(first, second);
    r.lambda1 = {first, 0.0};
    r.lambda2 = {second, 0.0};
    return r;
}

CharacteristicRoots characteristic_roots(const PhysicalParams& params, double energy) {
    return characteristic_roots(derive_scales(params, Convention::Reduced).xi,
                                wave_number_squared(params, energy));
}

complex DampedPlaneWave::operator()(double x) const {
    const complex phase{0.0, k * x};
    return std::exp(-xi * x) * (amp_a * std::exp(phase) + amp_b * std::exp(-phase));
}

DampedPlaneWave damped_plane_wave(const PhysicalParams& params, double energy, complex amp_a,
                                  complex amp_b) {
    const auto roots = characteristic_roots(params, energy);
    DampedPlaneWave w;
    w.xi = derive_scales(params, Convention::Reduced).xi;
    w.k = 0.5 * std::sqrt(std::abs(roots.discriminant));
    w.amp_a = amp_a;
    w.amp_b = amp_b;
    return w;
}

WaveSample sample_damped_wave(const DampedPlaneWave& wave, const GridSpec& grid) {
    return WaveSample::sample(grid, [&](double x) { return wave(x); });
}

double damped_wave_residual(const WaveSample& psi, double xi, double kappa) {
    const double h = psi.dx;
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < psi.size(); ++i) {
        const complex d2 = (psi.values[i + 1] - 2.0 * psi.values[i] + psi.values[i - 1]) / (h * h);
        const complex d1 = (psi.values[i + 1] - psi.values[i - 1]) / (2.0 * h);
        worst = std::max(worst, std::abs(d2 + 2.0 * xi * d1 + kappa * psi.values[i]));
    }
    return worst;
}

PacketTranslation packet_translation(double xi, double c, double t, double /*k0*/) {
    return {0.5 * xi, std::exp(-xi * c * t + 0.25 * xi * xi)};
}

complex damped_packet(double xi, double c, double t, double k0, double x) {
    const double s = x - c * t;
    return std::exp(complex{-xi * x - s * s, k0 * s});
}

complex translated_packet(const PacketTranslation& tr, double c, double t, double k0, double x) {
    const double s = x - c * t;
    const double env = s + tr.shift;
    return tr.amplitude * std::exp(complex{-env * env, k0 * s});
}

double packet_identity_residual(const PacketTranslation& tr, double xi, double c, double t,
                                double k0, const GridSpec& grid) {
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.x(i);
        worst = std::max(worst, std::abs(damped_packet(xi, c, t, k0, x) -
                                         translated_packet(tr, c, t, k0, x)));
    }
    return worst;
}

double packet_peak_shift(double xi, double c, double t) {
    const double centre = c * t;
    auto negative_log_envelope = [&](double x) {
        const double s = x - centre;
        return xi * x + s * s;
    };
    const double half_width = 10.0 + std::abs(xi);
    const auto [xmax, fmin] = boost::math::tools::brent_find_minima(
        negative_log_envelope, centre - half_width, centre + half_width, 52);
    (void)fmin;
    return centre - xmax;
}

}  // namespace fracschrod
