#pragma once

#include <vector>

#include "fracschrod/grid.hpp"
#include "fracschrod/params.hpp"

namespace fracschrod {

struct BoxLevel {
    int n = 0;
    double k = 0.0;       ///< 2 pi n / L
    double energy = 0.0;  ///< m^3 c^2 / (2 B^2) + hbar^2 pi^2 n^2 / (2 m L^2)
};

struct BoxSpectrum {
    std::vector<BoxLevel> levels;
};

/// Levels n = 1..count of the damped infinite well on [-L/2, L/2].
BoxSpectrum quantize_box(const PhysicalParams& params, int count);

/// m^3 c^2 / (2 B^2): the n-independent part of every box level.
double box_zero_point(const PhysicalParams& params);

/// A_n = sqrt(2 xi [(xi L / 2 pi n)^2 + 1] csch(xi L)). xi = 0 gives sqrt(2/L).
/// Throws std::domain_error when csch(xi L) underflows.
double box_normalization(double xi, double length, int n);
double box_normalization(const PhysicalParams& params, int n);

/// psi_n(x) = A_n exp(-xi x) sin(k_n x) on [-L/2, L/2], zero outside.
struct BoxEigenfunction {
    int n = 1;
    double amplitude = 0.0;
    double xi = 0.0;
    double k = 0.0;
    double length = 1.0;

    [[nodiscard]] double operator()(double x) const;
    [[nodiscard]] double derivative(double x) const;
};

BoxEigenfunction box_eigenfunction(double xi, double length, int n);
BoxEigenfunction box_eigenfunction(const PhysicalParams& params, int n);

/// Samples psi_n; throws std::invalid_argument unless the grid lies inside the box.
WaveSample box_eigenfunction(const PhysicalParams& params, int n, const GridSpec& grid);

struct BoxMomentum {
    complex quadrature;     ///< -i hbar * integral of psi psi' (Gauss-Legendre)
    complex boundary_term;  ///< -i hbar [psi^2 / 2] between the walls
};

BoxMomentum box_momentum_expectation(const PhysicalParams& params, int n);

}  // namespace fracschrod
