#include "fracschrod/ladder.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracschrod/oscillator.hpp"
#include "fracschrod/quadrature.hpp"
#include "fracschrod/stencil.hpp"

namespace fracschrod {

LadderOperator make_ladder(const PhysicalParams& params, LadderKind kind) {
    const auto scales = derive_scales(params, Convention::Reduced);
    const double c = params.mass / (2.0 * params.damping) * std::sqrt(0.5 * scales.eps_r);
    const double sign = kind == LadderKind::Destroy ? 1.0 : -1.0;
    return {kind, std::sqrt(params.mass * params.omega / (2.0 * params.hbar)), sign * c,
            sign * std::sqrt(params.hbar / (2.0 * params.mass * params.omega))};
}

double ladder_shift(const PhysicalParams& params) {
    const auto scales = derive_scales(params, Convention::Reduced);
    return params.mass / (2.0 * params.damping) * std::sqrt(scales.eps_r);
}

WaveSample apply_ladder(const LadderOperator& op, const WaveSample& psi) {
    if (psi.size() < 5) throw std::invalid_argument("apply_ladder: grid too coarse (need 5 points)");
    const WaveSample d = derivative(psi);
    WaveSample out{psi.x0, psi.dx, std::vector<complex>(psi.size())};
    for (std::size_t i = 0; i < psi.size(); ++i) {
        out.values[i] = (op.position_scale * psi.x(i) + op.constant) * psi.values[i] +
                        op.derivative_scale * d.values[i];
    }
    return out;
}

CommutatorCheck commutator_value(const PhysicalParams& params) {
    params.validate();
    const double k = params.hbar * params.mass * params.c;
    CommutatorCheck check;
    check.closed_form = k * std::sqrt(params.mass * params.omega / (2.0 * params.hbar));

    const auto destroy = make_ladder(params, LadderKind::Destroy);
    const double b = std::sqrt(params.mass * params.omega / params.hbar);
    const GridSpec grid(-10.0 / b, 10.0 / b, 8001);
    const std::function<double(double)> tests[] = {
        [b](double x) { return std::exp(-b * b * x * x); },
        [b](double x) { return b * x * std::exp(-0.5 * b * b * x * x); },
        [b](double x) {
            const double s = b * x - 0.5;
            return std::exp(-s * s) * std::cos(2.0 * b * x);
        },
    };
    auto apply_k = [k](const WaveSample& f) {
        WaveSample out = derivative(f);
        for (auto& v : out.values) v *= -k;
        return out;
    };
    bool first_test = true;
    for (const auto& f : tests) {
        const WaveSample psi = WaveSample::sample(grid, [&](double x) { return complex{f(x), 0.0}; });
        const WaveSample first = apply_ladder(destroy, apply_k(psi));
        const WaveSample second = apply_k(apply_ladder(destroy, psi));
        double overlap = 0.0;
        double norm = 0.0;
        for (std::size_t i = 0; i < psi.size(); ++i) {
            const complex comm = first.values[i] - second.values[i];
            check.max_deviation =
                std::max(check.max_deviation, std::abs(comm - check.closed_form * psi.values[i]));
            overlap += psi.values[i].real() * comm.real();
            norm += std::norm(psi.values[i]);
        }
        if (first_test) check.numeric = overlap / norm;
        first_test = false;
    }
    return check;
}

double ladder_ratio(int n, double mu, LadderKind kind) {
    if (kind == LadderKind::Destroy) {
        if (n < 1) throw std::invalid_argument("ladder_ratio: destruction needs n >= 1");
        return std::sqrt(pn_polynomial(n)(mu) / pn_polynomial(n - 1)(mu));
    }
    if (n < 0) throw std::invalid_argument("ladder_ratio: n must be >= 0");
    return std::sqrt(pn_polynomial(n + 1)(mu) / pn_polynomial(n)(mu));
}

GridSpec ladder_grid(const PhysicalParams& params, std::size_t n_points) {
    const double b = std::sqrt(params.mass * params.omega / params.hbar);
    const double centre = -ladder_shift(params) / b;
    return {centre - 14.0 / b, centre + 14.0 / b, n_points};
}

WaveSample ground_state(const PhysicalParams& params, const GridSpec& grid) {
    const auto psi = osc_eigenfunction(params, ladder_shift(params), 0);
    return WaveSample::sample(grid, [&](double x) { return complex{psi(x), 0.0}; });
}

BuiltState build_state(int n, const PhysicalParams& params, const GridSpec& grid,
                       double tolerance) {
    if (n < 0 || n > 12) throw std::invalid_argument("build_state: need 0 <= n <= 12");
    const double mu = ladder_shift(params);
    const auto create = make_ladder(params, LadderKind::Create);
    BuiltState out{ground_state(params, grid), 0.0, false};
    for (int k = 0; k < n; ++k) out.psi = apply_ladder(create, out.psi);
    const double norm = std::sqrt(pn_polynomial(n)(mu));
    for (auto& v : out.psi.values) v /= norm;
    const auto exact = osc_eigenfunction(params, mu, n);
    const WaveSample reference =
        WaveSample::sample(grid, [&](double x) { return complex{exact(x), 0.0}; });
    out.sup_error = sup_distance(out.psi, reference);
    out.flagged = out.sup_error > tolerance;
    return out;
}

WaveSample apply_fractional_hamiltonian(const PhysicalParams& params, const WaveSample& psi) {
    const double b = std::sqrt(params.mass * params.omega / params.hbar);
    const double g = 2.0 * ladder_shift(params);
    const double hw = params.hbar * params.omega;
    const WaveSample d1 = derivative(psi);
    const WaveSample d2 = second_derivative(psi);
    WaveSample out{psi.x0, psi.dx, std::vector<complex>(psi.size())};
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const double y = b * psi.x(i);
        out.values[i] = hw * (-0.5 * d2.values[i] / (b * b) - 0.5 * g * d1.values[i] / b +
                              0.5 * y * y * psi.values[i]);
    }
    return out;
}

double ladder_eigen_shift_residual(const PhysicalParams& params, int n, LadderKind kind,
                                   const GridSpec& grid) {
    const double mu = ladder_shift(params);
    const auto exact = osc_eigenfunction(params, mu, n);
    const WaveSample psi = WaveSample::sample(grid, [&](double x) { return complex{exact(x), 0.0}; });
    const WaveSample moved = apply_ladder(make_ladder(params, kind), psi);
    const WaveSample h_moved = apply_fractional_hamiltonian(params, moved);
    const double eps = oscillator_level(n, 2.0 * mu) + (kind == LadderKind::Destroy ? -1.0 : 1.0);
    const double target = params.hbar * params.omega * eps;
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        num += std::norm(h_moved.values[i] - target * moved.values[i]);
        den += std::norm(target * moved.values[i]);
    }
    return std::sqrt(num / den);
}

namespace {

template <typename F>
double expectation_trapezoid(const OscEigenfunction& psi, const GridSpec& grid, F&& integrand) {
    std::vector<double> f(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) f[i] = integrand(psi, grid.x(i));
    return trapezoid(std::span<const double>(f), grid.step());
}

}  // namespace

ExpectationReport fractional_energy_report(int n, const PhysicalParams& params) {
    if (n < 0) throw std::invalid_argument("fractional_energy_report: n must be >= 0");
    const double mu = ladder_shift(params);
    const double hw = params.hbar * params.omega;
    const double rest = params.mass * params.c * params.c;
    const double m_over_b = params.mass / params.damping;
    double formula = 0.25 * m_over_b * m_over_b * rest;
    if (n > 0) formula += hw * (n - pn_polynomial(n)(mu) / pn_polynomial(n - 1)(mu));

    const auto psi = osc_eigenfunction(params, mu, n);
    const double k = params.hbar * params.mass * params.c / (2.0 * params.damping);
    const double quad = expectation_trapezoid(psi, ladder_grid(params, 8001), [&](const OscEigenfunction& p, double x) {
        return p(x) * -k * p.derivative(x);
    });
    ExpectationReport r{"fractional kinetic energy n=" + std::to_string(n), {formula, 0.0}, {quad, 0.0}, 0.0};
    r.deviation = std::abs(r.formula_value - r.quadrature_value);
    return r;
}

ExpectationReport momentum_expectation_report(const PhysicalParams& params, int n) {
    if (n < 0) throw std::invalid_argument("momentum_expectation_report: n must be >= 0");
    const auto scales = derive_scales(params, Convention::Reduced);
    const double magnitude = std::sqrt(2.0 * params.hbar * params.mass * params.omega * scales.eps_r) /
                             (2.0 * std::sqrt(2.0));
    const auto psi = osc_eigenfunction(params, ladder_shift(params), n);
    const double integral = expectation_trapezoid(psi, ladder_grid(params, 8001), [](const OscEigenfunction& p, double x) {
        return p(x) * p.derivative(x);
    });
    ExpectationReport r{"momentum n=" + std::to_string(n), {0.0, -magnitude}, complex{0.0, -params.hbar} * integral, 0.0};
    r.deviation = std::abs(r.formula_value - r.quadrature_value);
    return r;
}

AdjointnessAudit adjointness_audit(const PhysicalParams& params, std::size_t n_points) {
    if (n_points < 16) throw std::invalid_argument("adjointness_audit: need at least 16 points");
    const GridSpec grid = ladder_grid(params, n_points);
    const auto destroy = make_ladder(params, LadderKind::Destroy);
    const auto create = make_ladder(params, LadderKind::Create);
    const std::size_t n = n_points;
    // Column j of an operator matrix is the operator applied to the unit vector e_j.
    auto dense = [&](const LadderOperator& op) {
        std::vector<std::vector<double>> m(n, std::vector<double>(n));
        WaveSample unit{grid.x_min(), grid.step(), std::vector<complex>(n)};
        for (std::size_t j = 0; j < n; ++j) {
            unit.values.assign(n, complex{});
            unit.values[j] = 1.0;
            const WaveSample col = apply_ladder(op, unit);
            for (std::size_t i = 0; i < n; ++i) m[i][j] = col.values[i].real();
        }
        return m;
    };
    const auto a = dense(destroy);
    const auto a_dag = dense(create);
    AdjointnessAudit audit;
    audit.expected_offset = 2.0 * destroy.constant;
    audit.measured_offset = a[n / 2][n / 2] - a_dag[n / 2][n / 2];
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double defect = a[j][i] - a_dag[i][j] - (i == j ? audit.expected_offset : 0.0);
            const bool boundary = i < 2 || j < 2 || i + 2 >= n || j + 2 >= n;
            double& slot = boundary ? audit.boundary_defect : audit.interior_defect;
            slot = std::max(slot, std::abs(defect));
        }
    }
    return audit;
}

}  // namespace fracschrod
