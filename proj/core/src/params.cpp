#include "fracschrod/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracschrod {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument(std::string("parameter '") + name +
                                    "' must be positive and finite");
    }
}

}  // namespace

PhysicalParams PhysicalParams::natural(double damping, double omega, double length) {
    PhysicalParams p;
    p.damping = damping;
    p.omega = omega;
    p.length = length;
    p.validate();
    return p;
}

void PhysicalParams::validate() const {
    require_positive(mass, "m");
    require_positive(c, "c");
    require_positive(hbar, "hbar");
    require_positive(damping, "B");
    require_positive(omega, "omega");
    require_positive(length, "L");
}

PhysicalParams PhysicalParams::with_damping(double b) const {
    PhysicalParams p = *this;
    p.damping = b;
    p.validate();
    return p;
}

std::string_view to_string(Convention convention) {
    switch (convention) {
        case Convention::Reduced: return "reduced";
        case Convention::Consistent: return "consistent";
    }
    return "unknown";
}

Convention parse_convention(std::string_view text) {
    if (text == "reduced") return Convention::Reduced;
    if (text == "consistent") return Convention::Consistent;
    throw std::invalid_argument("unknown convention '" + std::string(text) +
                                "' (expected 'reduced' or 'consistent')");
}

DerivedScales derive_scales(const PhysicalParams& params, Convention convention) {
    params.validate();
    DerivedScales s;
    s.xi = params.mass * params.mass * params.c / (params.hbar * params.damping);
    s.eps_r = params.mass * params.c * params.c / (params.hbar * params.omega);
    s.b = std::sqrt(params.mass * params.omega / params.hbar);
    const double reduced = params.mass / params.damping * std::sqrt(s.eps_r);
    s.g = convention == Convention::Reduced ? reduced : 2.0 * s.xi / s.b;
    s.mu = 0.5 * s.g;
    return s;
}

double special_damping_coefficient(Problem problem, double mass) {
    switch (problem) {
        case Problem::Box: return mass / std::sqrt(2.0);
        case Problem::Oscillator: return mass / std::sqrt(8.0);
    }
    return mass;
}

double wave_number_squared(const PhysicalParams& params, double energy) {
    return 2.0 * params.mass * energy / (params.hbar * params.hbar);
}

bool underdamped_condition(double xi, double kappa) { return xi * xi < kappa; }

bool underdamped_condition(const PhysicalParams& params, double energy) {
    const double xi = derive_scales(params, Convention::Reduced).xi;
    return underdamped_condition(xi, wave_number_squared(params, energy));
}

double damping_energy_shift(const PhysicalParams& params) {
    const double xi = derive_scales(params, Convention::Reduced).xi;
    return params.hbar * params.hbar * xi * xi / (2.0 * params.mass);
}

}  // namespace fracschrod
