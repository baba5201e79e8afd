#pragma once

#include "fracschrod/grid.hpp"
#include "fracschrod/params.hpp"

namespace fracschrod {

enum class Regime { UnderDamped, Critical, OverDamped };

/// Roots of lambda^2 + 2 xi lambda + kappa = 0, kappa = 2 m E / hbar^2.
/// Complex roots come with the positive imaginary part first; real roots
/// in descending order.
struct CharacteristicRoots {
    complex lambda1;
    complex lambda2;
    double discriminant = 0.0;  ///< 4 xi^2 - 4 kappa
    Regime regime = Regime::Critical;
};

CharacteristicRoots characteristic_roots(double xi, double kappa);
CharacteristicRoots characteristic_roots(const PhysicalParams& params, double energy);

/// psi(x) = exp(-xi x) (A exp(i k x) + B exp(-i k x)).
struct DampedPlaneWave {
    double xi = 0.0;
    double k = 0.0;
    complex amp_a{1.0, 0.0};
    complex amp_b{0.0, 0.0};

    [[nodiscard]] complex operator()(double x) const;
};

/// Wave with k = sqrt(|discriminant|) / 2 for the given energy.
DampedPlaneWave damped_plane_wave(const PhysicalParams& params, double energy, complex amp_a,
                                  complex amp_b);

WaveSample sample_damped_wave(const DampedPlaneWave& wave, const GridSpec& grid);

/// Largest |psi'' + 2 xi psi' + kappa psi| over interior nodes, using
/// second-order central differences.
double damped_wave_residual(const WaveSample& psi, double xi, double kappa);

/// exp(-xi x) u(x - ct) = amplitude * u_translated, with the Gaussian envelope
/// exp(-(x - ct + shift)^2) and unchanged carrier exp(i k0 (x - ct)).
struct PacketTranslation {
    double shift = 0.0;
    double amplitude = 1.0;
};

PacketTranslation packet_translation(double xi, double c, double t, double k0);

/// exp(-xi x) exp(-(x-ct)^2 + i k0 (x-ct)).
complex damped_packet(double xi, double c, double t, double k0, double x);
/// amplitude * exp(-(x - ct + shift)^2 + i k0 (x-ct)).
complex translated_packet(const PacketTranslation& tr, double c, double t, double k0, double x);

/// Maximum pointwise |damped_packet - translated_packet| over the grid.
double packet_identity_residual(const PacketTranslation& tr, double xi, double c, double t,
                                double k0, const GridSpec& grid);

/// Envelope displacement found by locating the maximum of |damped_packet|
/// numerically with Brent's method; returns ct - argmax.
double packet_peak_shift(double xi, double c, double t);

}  // namespace fracschrod
