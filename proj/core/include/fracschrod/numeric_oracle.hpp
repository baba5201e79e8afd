#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracschrod/grid.hpp"
#include "fracschrod/params.hpp"

namespace fracschrod {

class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, int iterations)
        : std::runtime_error(what), iterations_(iterations) {}
    [[nodiscard]] int iterations() const { return iterations_; }

private:
    int iterations_;
};

enum class PotentialKind { Box, Harmonic, Custom };

struct Potential {
    PotentialKind kind = PotentialKind::Box;
    std::vector<double> samples;  ///< V at every grid node (Custom only)

    static Potential box() { return {PotentialKind::Box, {}}; }
    static Potential harmonic() { return {PotentialKind::Harmonic, {}}; }
    static Potential custom(std::vector<double> samples) {
        return {PotentialKind::Custom, std::move(samples)};
    }
};

/// Symmetric tridiagonal matrix on the interior nodes of `grid` (Dirichlet
/// ends). Eigenvalues of the represented operator are the matrix eigenvalues
/// plus `shift`; eigenvectors map back to wavefunction samples through
/// psi_i = back_transform_i * v_i.
struct OperatorMatrix {
    GridSpec grid;
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;
    std::vector<double> back_transform;
    double shift = 0.0;
    std::string label;

    [[nodiscard]] std::size_t dimension() const { return diagonal.size(); }
};

/// Operator -k psi'' - 2 k d psi' + V psi (k = kinetic, d = damping),
/// discretised after the substitution u = exp(d x) psi, which removes the
/// first-derivative term exactly and leaves -k u'' + V u with shift k d^2.
OperatorMatrix build_transformed_operator(double kinetic, double damping,
                                          std::span<const double> potential, const GridSpec& grid);

/// Same operator, discretised directly with second-order central differences
/// for both derivatives, then symmetrised by a diagonal similarity. Requires
/// damping * h < 1.
OperatorMatrix build_direct_operator(double kinetic, double damping,
                                     std::span<const double> potential, const GridSpec& grid);

/// The damped wave equation in physical units: kinetic = hbar^2/2m, damping = xi.
/// Box: V = 0 between the grid ends. Harmonic: V = m omega^2 x^2 / 2.
OperatorMatrix build_operator(const PhysicalParams& params, const Potential& potential,
                              const GridSpec& grid);

/// Dimensionless oscillator eps psi = -psi''/2 - (g/2) psi' + y^2 psi / 2 on a y-grid.
OperatorMatrix build_oscillator_operator(double g, const GridSpec& y_grid);

/// Default y-grid [-g/2 - 12, 12] for the dimensionless oscillator.
GridSpec oscillator_y_grid(double g, std::size_t n_points);

struct SpectrumResult {
    std::vector<double> values;  ///< ascending, shift included
    std::string provenance;
    int max_iterations = 0;  ///< largest bisection count over all values
};

/// Smallest `count` eigenvalues by Sturm-sequence bisection.
/// Requires count <= n_points / 4.
SpectrumResult spectrum(const OperatorMatrix& matrix, std::size_t count);

/// (4 E(h/2) - E(h)) / 3 with the builder evaluated on `grid` and on grid.refined().
SpectrumResult richardson_spectrum(const std::function<OperatorMatrix(const GridSpec&)>& build,
                                   const GridSpec& grid, std::size_t count);

/// Eigenfunction for eigenvalue `index` (0-based) on the full grid, Dirichlet
/// zeros at the ends, normalised to unit trapezoid norm; the sample of largest
/// magnitude is positive.
WaveSample eigenfunction(const OperatorMatrix& matrix, std::size_t index);

struct Weight {
    double exponent = 0.0;  ///< w(x) = exp(exponent * x)

    static Weight unweighted() { return {0.0}; }
    static Weight exponential(double coefficient) { return {coefficient}; }
};

/// Trapezoid quadrature of conj(f) g w over the common grid.
complex inner_product(const WaveSample& f, const WaveSample& g, Weight weight = Weight::unweighted());

enum class Discretisation { Transformed, Direct };

/// E_n(xi) - E_n(0) for the first five levels. Transformed uses one grid;
/// Direct extrapolates over three (single grid for Custom). Default grids:
/// 4001 nodes, except 501 for the box on the direct route. Custom needs `grid`.
std::vector<double> level_shifts(const PhysicalParams& params, const Potential& potential,
                                 Discretisation route, std::optional<GridSpec> grid = std::nullopt);

/// Location of the largest |psi| sample, refined by a parabola through its neighbours.
double peak_location(const WaveSample& psi);

/// max over the first five levels of |(E_n(xi) - E_n(0)) - hbar^2 xi^2 / 2m|
/// with both spectra from the transformed discretisation on the same grid.
double spectral_shift_check(const PhysicalParams& params, const Potential& potential,
                            std::optional<GridSpec> grid = std::nullopt);

/// As spectral_shift_check, but from the direct discretisation, so the
/// shift law is not built into the matrix.
double spectral_shift_check_direct(const PhysicalParams& params, const Potential& potential,
                                   std::optional<GridSpec> grid = std::nullopt);

}  // namespace fracschrod
