#pragma once

#include <string_view>

namespace fracschrod {

/// Physical constants and problem parameters, in one coherent unit system.
///
/// `damping` is the mass-dimension coefficient B of the fractional kinetic
/// term. `omega` is only read by oscillator problems and `length` only by
/// box problems, but every field must be strictly positive.
struct PhysicalParams {
    double mass = 1.0;
    double c = 1.0;
    double hbar = 1.0;
    double damping = 1.0;
    double omega = 1.0;
    double length = 1.0;

    /// m = c = hbar = 1.
    static PhysicalParams natural(double damping, double omega = 1.0, double length = 1.0);

    /// Throws std::invalid_argument when any field is not strictly positive and finite.
    void validate() const;

    /// Copy with a different damping coefficient.
    [[nodiscard]] PhysicalParams with_damping(double b) const;
};

/// How the damping term of the dimensionless oscillator equation is scaled.
///
///  - Reduced: coefficient g = (m/B) sqrt(eps_r), the published reduced form.
///  - Consistent: coefficient g = 2 xi / b, obtained by substituting y = b x
///    directly into the damped wave equation.
enum class Convention { Reduced, Consistent };

enum class Problem { Box, Oscillator };

std::string_view to_string(Convention convention);
/// Accepts "reduced" or "consistent"; throws std::invalid_argument otherwise.
Convention parse_convention(std::string_view text);

struct DerivedScales {
    double xi = 0.0;     ///< m^2 c / (hbar B), inverse length
    double eps_r = 0.0;  ///< m c^2 / (hbar omega)
    double b = 0.0;      ///< sqrt(m omega / hbar), y = b x
    double g = 0.0;      ///< damping coefficient of the dimensionless oscillator equation
    double mu = 0.0;     ///< Gaussian shift, g / 2
};

DerivedScales derive_scales(const PhysicalParams& params, Convention convention);

/// Damping coefficient B at which the zero-point term equals the rest energy.
/// Box: m / sqrt(2). Oscillator: m / sqrt(8).
double special_damping_coefficient(Problem problem, double mass = 1.0);

/// 2 m E / hbar^2.
double wave_number_squared(const PhysicalParams& params, double energy);

/// xi^2 < kappa, with kappa = 2 m E / hbar^2.
bool underdamped_condition(double xi, double kappa);
bool underdamped_condition(const PhysicalParams& params, double energy);

/// hbar^2 xi^2 / (2 m), the zero-point shift produced by the damping term.
double damping_energy_shift(const PhysicalParams& params);

}  // namespace fracschrod
