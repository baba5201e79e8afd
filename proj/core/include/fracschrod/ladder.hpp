#pragma once

#include <string>

#include "fracschrod/grid.hpp"
#include "fracschrod/params.hpp"

namespace fracschrod {

enum class LadderKind { Destroy, Create };

/// Fractional ladder operators on position-space samples:
///
///   a   = sqrt(m w / 2 hbar) x + C + sqrt(hbar / 2 m w) d/dx
///   a^+ = sqrt(m w / 2 hbar) x - C - sqrt(hbar / 2 m w) d/dx
///
/// with C = (m / 2B) sqrt(eps_r / 2). They are not adjoint to each other:
/// the transpose of a differs from a^+ by 2C times the identity.
struct LadderOperator {
    LadderKind kind = LadderKind::Destroy;
    double position_scale = 0.0;
    double constant = 0.0;
    double derivative_scale = 0.0;
};

LadderOperator make_ladder(const PhysicalParams& params, LadderKind kind);

/// Gaussian shift annihilated by the destruction operator, (m / 2B) sqrt(eps_r).
/// Equal to the Reduced-convention mu.
double ladder_shift(const PhysicalParams& params);

/// Uses fourth-order stencils; throws std::invalid_argument below 5 samples.
WaveSample apply_ladder(const LadderOperator& op, const WaveSample& psi);

struct CommutatorCheck {
    double closed_form = 0.0;    ///< hbar m c sqrt(m w / 2 hbar)
    double max_deviation = 0.0;  ///< worst |[a, K] f - closed_form f| over three test functions
    double numeric = 0.0;        ///< <f, [a, K] f> / <f, f> for the Gaussian test function
};

/// Commutator of the destruction operator with K = -hbar m c d/dx, the
/// position-space form of the squared fractional momentum.
CommutatorCheck commutator_value(const PhysicalParams& params);

/// Destroy: sqrt(P_n / P_{n-1}) (n >= 1). Create: sqrt(P_{n+1} / P_n).
double ladder_ratio(int n, double mu, LadderKind kind);

/// Physical grid centred on the ladder ground state, half-width 14 / b.
GridSpec ladder_grid(const PhysicalParams& params, std::size_t n_points = 6001);

/// psi_0 with the ladder shift.
WaveSample ground_state(const PhysicalParams& params, const GridSpec& grid);

struct BuiltState {
    WaveSample psi;
    double sup_error = 0.0;  ///< against the closed-form eigenfunction
    bool flagged = false;    ///< sup_error above tolerance
};

/// (a^+)^n psi_0 / sqrt(P_n(mu)) by repeated finite-difference application.
/// Throws std::invalid_argument for n > 12.
BuiltState build_state(int n, const PhysicalParams& params, const GridSpec& grid,
                       double tolerance = 1e-5);

/// hbar w [-(1/2) d^2/dy^2 - (g/2) d/dy + y^2/2] psi with y = b x and
/// g = 2 * ladder_shift, the Hamiltonian whose eigenstates the ladder connects.
WaveSample apply_fractional_hamiltonian(const PhysicalParams& params, const WaveSample& psi);

/// ||H (a psi_n) - hbar w (eps_n -/+ 1) (a psi_n)|| / ||hbar w (eps_n -/+ 1) (a psi_n)||.
double ladder_eigen_shift_residual(const PhysicalParams& params, int n, LadderKind kind,
                                   const GridSpec& grid);

/// Paired closed-form and quadrature values of one expectation.
struct ExpectationReport {
    std::string quantity;
    complex formula_value;
    complex quadrature_value;
    double deviation = 0.0;  ///< |formula - quadrature|
};

/// Formula: hbar w (n - P_n/P_{n-1}) + (m^2 / 4B^2) m c^2, ratio term omitted at n = 0.
/// Quadrature: integral of psi_n (-hbar m c / 2B) psi_n' dx.
ExpectationReport fractional_energy_report(int n, const PhysicalParams& params);

/// Formula: sqrt(2 hbar m w eps_r) / (2 i sqrt 2).
/// Quadrature: integral of psi_n (-i hbar) psi_n' dx.
ExpectationReport momentum_expectation_report(const PhysicalParams& params, int n);

struct AdjointnessAudit {
    double expected_offset = 0.0;    ///< 2C
    double measured_offset = 0.0;    ///< (A^T - A^+) on the middle diagonal entry
    double interior_defect = 0.0;    ///< max |(A^T - A^+ - 2C I)_ij| away from the boundary rows
    double boundary_defect = 0.0;    ///< same, restricted to the boundary rows and columns
};

/// Builds a and a^+ as dense matrices on an n_points grid and compares the
/// transpose of a with a^+.
AdjointnessAudit adjointness_audit(const PhysicalParams& params, std::size_t n_points = 64);

}  // namespace fracschrod
