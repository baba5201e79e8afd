#include "fracschrod/numeric_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracschrod/quadrature.hpp"

namespace fracschrod {

namespace {

std::vector<double> interior_potential(std::span<const double> potential, const GridSpec& grid) {
    if (potential.empty()) return std::vector<double>(grid.size() - 2, 0.0);
    if (potential.size() != grid.size()) {
        throw std::invalid_argument("potential samples do not match the grid");
    }
    return {potential.begin() + 1, potential.end() - 1};
}

std::vector<double> physical_potential(const PhysicalParams& params, const Potential& potential,
                                       const GridSpec& grid) {
    switch (potential.kind) {
        case PotentialKind::Box: return {};
        case PotentialKind::Harmonic: {
            std::vector<double> v(grid.size());
            const double k = 0.5 * params.mass * params.omega * params.omega;
            for (std::size_t i = 0; i < grid.size(); ++i) v[i] = k * grid.x(i) * grid.x(i);
            return v;
        }
        case PotentialKind::Custom:
            if (potential.samples.size() != grid.size()) {
                throw std::invalid_argument("custom potential samples do not match the grid");
            }
            return potential.samples;
    }
    return {};
}

// Number of eigenvalues strictly below x.
std::size_t sturm_count(const std::vector<double>& d, const std::vector<double>& e2, double x,
                        double pivmin) {
    std::size_t count = 0;
    double q = d[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        q = d[i] - x - e2[i - 1] / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

// Solves (T - lambda I) x = rhs with LU and partial pivoting.
void shifted_solve(const OperatorMatrix& m, double lambda, std::vector<double>& rhs) {
    const std::size_t n = m.dimension();
    std::vector<double> dl(m.off_diagonal);
    std::vector<double> du(m.off_diagonal);
    std::vector<double> du2(n > 2 ? n - 2 : 0, 0.0);
    std::vector<double> d(n);
    std::vector<std::size_t> ipiv(n);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = m.diagonal[i] - lambda;
        ipiv[i] = i;
        scale = std::max(scale, std::abs(m.diagonal[i]));
    }
    const double tiny = std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (d[i] != 0.0) {
                const double fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
            }
        } else {
            const double fact = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = fact;
            const double temp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = temp - fact * d[i + 1];
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du[i + 1];
            }
            ipiv[i] = i + 1;
        }
    }
    for (auto& pivot : d) {
        if (std::abs(pivot) < tiny) pivot = pivot < 0.0 ? -tiny : tiny;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (ipiv[i] == i) {
            rhs[i + 1] -= dl[i] * rhs[i];
        } else {
            const double temp = rhs[i] - dl[i] * rhs[i + 1];
            rhs[i] = rhs[i + 1];
            rhs[i + 1] = temp;
        }
    }
    rhs[n - 1] /= d[n - 1];
    if (n > 1) rhs[n - 2] = (rhs[n - 2] - du[n - 2] * rhs[n - 1]) / d[n - 2];
    for (std::size_t k = n - 2; k-- > 0;) {
        rhs[k] = (rhs[k] - du[k] * rhs[k + 1] - du2[k] * rhs[k + 2]) / d[k];
    }
}

}  // namespace

OperatorMatrix build_transformed_operator(double kinetic, double damping,
                                          std::span<const double> potential, const GridSpec& grid) {
    if (!(kinetic > 0.0)) throw std::invalid_argument("kinetic coefficient must be positive");
    const auto v = interior_potential(potential, grid);
    const double h = grid.step();
    const std::size_t n = grid.size() - 2;
    OperatorMatrix m{grid, std::vector<double>(n), std::vector<double>(n - 1, -kinetic / (h * h)),
                     std::vector<double>(n), kinetic * damping * damping, "transformed"};
    for (std::size_t i = 0; i < n; ++i) {
        m.diagonal[i] = 2.0 * kinetic / (h * h) + v[i];
        m.back_transform[i] = std::exp(-damping * grid.x(i + 1));
    }
    return m;
}

OperatorMatrix build_direct_operator(double kinetic, double damping,
                                     std::span<const double> potential, const GridSpec& grid) {
    if (!(kinetic > 0.0)) throw std::invalid_argument("kinetic coefficient must be positive");
    const double h = grid.step();
    if (!(std::abs(damping) * h < 1.0)) {
        throw std::invalid_argument("direct discretisation needs |damping| * h < 1");
    }
    const auto v = interior_potential(potential, grid);
    const std::size_t n = grid.size() - 2;
    // Row i: -k [(p_{i+1} - 2 p_i + p_{i-1}) / h^2 + d (p_{i+1} - p_{i-1}) / h] + V_i p_i.
    const double upper = -kinetic * (1.0 / (h * h) + damping / h);
    const double lower = -kinetic * (1.0 / (h * h) - damping / h);
    const double log_ratio = 0.5 * std::log(upper / lower);
    OperatorMatrix m{grid, std::vector<double>(n), std::vector<double>(n - 1, -std::sqrt(upper * lower)),
                     std::vector<double>(n), 0.0, "direct"};
    for (std::size_t i = 0; i < n; ++i) {
        m.diagonal[i] = 2.0 * kinetic / (h * h) + v[i];
        m.back_transform[i] = std::exp(-log_ratio * static_cast<double>(i + 1));
    }
    return m;
}

OperatorMatrix build_operator(const PhysicalParams& params, const Potential& potential,
                              const GridSpec& grid) {
    const auto scales = derive_scales(params, Convention::Reduced);
    const double kinetic = params.hbar * params.hbar / (2.0 * params.mass);
    const auto v = physical_potential(params, potential, grid);
    return build_transformed_operator(kinetic, scales.xi, v, grid);
}

OperatorMatrix build_oscillator_operator(double g, const GridSpec& y_grid) {
    std::vector<double> v(y_grid.size());
    for (std::size_t i = 0; i < y_grid.size(); ++i) v[i] = 0.5 * y_grid.x(i) * y_grid.x(i);
    return build_transformed_operator(0.5, 0.5 * g, v, y_grid);
}

GridSpec oscillator_y_grid(double g, std::size_t n_points) {
    return {-0.5 * g - 12.0, 12.0, n_points};
}

SpectrumResult spectrum(const OperatorMatrix& matrix, std::size_t count) {
    const std::size_t n = matrix.dimension();
    if (count == 0) return {{}, matrix.label, 0};
    if (count > matrix.grid.size() / 4) {
        throw std::invalid_argument("spectrum: count must not exceed n_points / 4");
    }
    std::vector<double> e2(n - 1);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double left = i > 0 ? std::abs(matrix.off_diagonal[i - 1]) : 0.0;
        const double right = i + 1 < n ? std::abs(matrix.off_diagonal[i]) : 0.0;
        lo = std::min(lo, matrix.diagonal[i] - left - right);
        hi = std::max(hi, matrix.diagonal[i] + left + right);
        norm = std::max(norm, std::abs(matrix.diagonal[i]) + left + right);
        if (i + 1 < n) e2[i] = matrix.off_diagonal[i] * matrix.off_diagonal[i];
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, norm * norm);
    constexpr int kMaxIterations = 256;

    SpectrumResult result{std::vector<double>(count), matrix.label, 0};
    double previous = lo;
    for (std::size_t k = 0; k < count; ++k) {
        double a = previous;
        double b = hi;
        int iter = 0;
        while (b - a > 2.0 * eps * std::max(std::abs(a), std::abs(b)) + pivmin) {
            if (++iter > kMaxIterations) {
                throw SolverError("spectrum: bisection did not converge for eigenvalue " +
                                      std::to_string(k) + " after " + std::to_string(kMaxIterations) +
                                      " iterations",
                                  iter);
            }
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            if (sturm_count(matrix.diagonal, e2, mid, pivmin) > k) {
                b = mid;
            } else {
                a = mid;
            }
        }
        const double value = 0.5 * (a + b);
        result.values[k] = value + matrix.shift;
        result.max_iterations = std::max(result.max_iterations, iter);
        previous = a;
    }
    return result;
}

SpectrumResult richardson_spectrum(const std::function<OperatorMatrix(const GridSpec&)>& build,
                                   const GridSpec& grid, std::size_t count) {
    const auto coarse = spectrum(build(grid), count);
    const auto fine = spectrum(build(grid.refined()), count);
    SpectrumResult out{std::vector<double>(count), fine.provenance + "+richardson",
                       std::max(coarse.max_iterations, fine.max_iterations)};
    for (std::size_t k = 0; k < count; ++k) {
        out.values[k] = (4.0 * fine.values[k] - coarse.values[k]) / 3.0;
    }
    return out;
}

WaveSample eigenfunction(const OperatorMatrix& matrix, std::size_t index) {
    const auto values = spectrum(matrix, index + 1);
    const double lambda = values.values[index] - matrix.shift;
    const std::size_t n = matrix.dimension();
    std::vector<double> v(n);
    // Deterministic, non-symmetric start so no eigenvector is orthogonal to it.
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(0.37 * static_cast<double>(i) + 0.1);
    for (int iter = 0; iter < 4; ++iter) {
        shifted_solve(matrix, lambda, v);
        double norm = 0.0;
        for (double x : v) norm = std::max(norm, std::abs(x));
        for (double& x : v) x /= norm;
    }
    WaveSample psi;
    psi.x0 = matrix.grid.x_min();
    psi.dx = matrix.grid.step();
    psi.values.assign(matrix.grid.size(), complex{});
    for (std::size_t i = 0; i < n; ++i) psi.values[i + 1] = matrix.back_transform[i] * v[i];
    const double norm = std::sqrt(inner_product(psi, psi).real());
    std::size_t peak = 0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (std::abs(psi.values[i]) > std::abs(psi.values[peak])) peak = i;
    }
    const double sign = psi.values[peak].real() < 0.0 ? -1.0 : 1.0;
    for (auto& value : psi.values) value *= sign / norm;
    return psi;
}

complex inner_product(const WaveSample& f, const WaveSample& g, Weight weight) {
    if (!f.same_grid(g)) throw std::invalid_argument("inner_product: grid mismatch");
    std::vector<complex> integrand(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double w = weight.exponent == 0.0 ? 1.0 : std::exp(weight.exponent * f.x(i));
        integrand[i] = std::conj(f.values[i]) * g.values[i] * w;
    }
    return trapezoid(integrand, f.dx);
}

namespace {

GridSpec default_shift_grid(const PhysicalParams& params, const Potential& potential, Discretisation route,
                            std::optional<GridSpec> grid) {
    if (grid) return *grid;
    switch (potential.kind) {
        case PotentialKind::Box:
            // Romberg reaches 2001 nodes from 501; finer box grids are round-off limited.
            return {-0.5 * params.length, 0.5 * params.length, route == Discretisation::Direct ? 501u : 4001u};
        case PotentialKind::Harmonic: {
            const auto scales = derive_scales(params, Convention::Consistent);
            return {(-scales.mu - 12.0) / scales.b, 12.0 / scales.b, 4001};
        }
        case PotentialKind::Custom: break;
    }
    throw std::invalid_argument("spectral shift check with a custom potential needs an explicit grid");
}

}  // namespace

std::vector<double> level_shifts(const PhysicalParams& params, const Potential& potential,
                                 Discretisation route, std::optional<GridSpec> grid) {
    const GridSpec g = default_shift_grid(params, potential, route, grid);
    const double kinetic = params.hbar * params.hbar / (2.0 * params.mass);
    const double xi = derive_scales(params, Convention::Reduced).xi;
    auto solve = [&](double damping) -> SpectrumResult {
        if (route == Discretisation::Transformed) {
            return spectrum(build_transformed_operator(kinetic, damping, physical_potential(params, potential, g), g), 5);
        }
        if (potential.kind == PotentialKind::Custom) {
            return spectrum(build_direct_operator(kinetic, damping, potential.samples, g), 5);
        }
        // Romberg over h, h/2, h/4: the central-difference error is even in h.
        std::vector<std::vector<double>> e;
        GridSpec level = g;
        for (int r = 0; r < 3; ++r, level = level.refined()) {
            e.push_back(spectrum(
                build_direct_operator(kinetic, damping, physical_potential(params, potential, level), level), 5).values);
        }
        SpectrumResult out{std::vector<double>(5), "direct+romberg", 0};
        for (std::size_t k = 0; k < 5; ++k) {
            const double r1 = (4.0 * e[1][k] - e[0][k]) / 3.0;
            const double r2 = (4.0 * e[2][k] - e[1][k]) / 3.0;
            out.values[k] = (16.0 * r2 - r1) / 15.0;
        }
        return out;
    };
    const auto damped = solve(xi);
    const auto undamped = solve(0.0);
    std::vector<double> shifts(damped.values.size());
    for (std::size_t k = 0; k < shifts.size(); ++k) shifts[k] = damped.values[k] - undamped.values[k];
    return shifts;
}

double peak_location(const WaveSample& psi) {
    if (psi.size() < 3) throw std::invalid_argument("peak_location: need at least 3 samples");
    std::size_t peak = 0;
    for (std::size_t i = 1; i < psi.size(); ++i) {
        if (std::abs(psi.values[i]) > std::abs(psi.values[peak])) peak = i;
    }
    if (peak == 0 || peak + 1 == psi.size()) return psi.x(peak);
    const double left = std::abs(psi.values[peak - 1]);
    const double mid = std::abs(psi.values[peak]);
    const double right = std::abs(psi.values[peak + 1]);
    const double curvature = left - 2.0 * mid + right;
    const double offset = curvature == 0.0 ? 0.0 : 0.5 * (left - right) / curvature;
    return psi.x(peak) + offset * psi.dx;
}

namespace {

double worst_shift_deviation(const PhysicalParams& params, const std::vector<double>& shifts) {
    const double expected = damping_energy_shift(params);
    double worst = 0.0;
    for (double s : shifts) worst = std::max(worst, std::abs(s - expected));
    return worst;
}

}  // namespace

double spectral_shift_check(const PhysicalParams& params, const Potential& potential,
                            std::optional<GridSpec> grid) {
    return worst_shift_deviation(params, level_shifts(params, potential, Discretisation::Transformed, grid));
}

double spectral_shift_check_direct(const PhysicalParams& params, const Potential& potential,
                                   std::optional<GridSpec> grid) {
    return worst_shift_deviation(params, level_shifts(params, potential, Discretisation::Direct, grid));
}

}  // namespace fracschrod
