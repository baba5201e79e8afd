#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fracschrod/box_well.hpp"
#include "fracschrod/numeric_oracle.hpp"
#include "fracschrod/oscillator.hpp"

using namespace fracschrod;

namespace {

constexpr double kPi = std::numbers::pi;

GridSpec unit_box(std::size_t n = 4001) { return {-0.5, 0.5, n}; }

SpectrumResult box_richardson(const PhysicalParams& p, std::size_t count, std::size_t n = 4001) {
    return richardson_spectrum([&](const GridSpec& g) { return build_operator(p, Potential::box(), g); },
                               GridSpec(-p.length / 2, p.length / 2, n), count);
}

SpectrumResult osc_richardson(double g, std::size_t count) {
    return richardson_spectrum([g](const GridSpec& y) { return build_oscillator_operator(g, y); },
                               oscillator_y_grid(g, 4001), count);
}

}  // namespace

TEST(BuildOperator, UndampedIsStandardStencil) {
    const auto m = build_operator(PhysicalParams::natural(1e200), Potential::box(), GridSpec(0.0, 1.0, 101));
    const double h = 0.01;
    ASSERT_EQ(m.dimension(), 99u);
    EXPECT_NEAR(m.diagonal[10], 1.0 / (h * h), 1e-9);
    EXPECT_NEAR(m.off_diagonal[10], -0.5 / (h * h), 1e-9);
    EXPECT_NEAR(m.shift, 0.0, 1e-300);
}

TEST(BuildOperator, CustomSamplesMustMatchGrid) {
    EXPECT_THROW(build_operator(PhysicalParams::natural(1.0), Potential::custom({1.0, 2.0}), unit_box(64)),
                 std::invalid_argument);
}

TEST(BuildOperator, DirectNeedsResolvedDamping) {
    const std::vector<double> v(64, 0.0);
    EXPECT_THROW(build_direct_operator(0.5, 100.0, v, GridSpec(0.0, 1.0, 64)), std::invalid_argument);
}

TEST(Spectrum, DampedBoxGround) {
    const auto s = box_richardson(PhysicalParams::natural(1.0), 1);
    EXPECT_NEAR(s.values[0], 0.5 + kPi * kPi / 2.0, 1e-6 * 5.4348);
    EXPECT_NEAR(s.values[0], 5.4348, 1e-4);
}

TEST(Spectrum, StandardBox) {
    const auto s = box_richardson(PhysicalParams::natural(1e200), 3);
    for (int n = 1; n <= 3; ++n) EXPECT_NEAR(s.values[n - 1], kPi * kPi * n * n / 2.0, 1e-6 * n * n);
}

TEST(Spectrum, StandardOscillator) {
    const auto s = osc_richardson(0.0, 6);
    for (int n = 0; n <= 5; ++n) EXPECT_NEAR(s.values[n], n + 0.5, 1e-6);
}

TEST(Spectrum, DampedOscillatorGround) {
    EXPECT_NEAR(osc_richardson(std::sqrt(8.0), 1).values[0], 1.5, 1e-6);
}

TEST(Spectrum, MonotoneAndBounded) {
    const auto m = build_operator(PhysicalParams::natural(0.7), Potential::harmonic(), GridSpec(-12, 12, 801));
    const auto s = spectrum(m, 200);
    for (std::size_t i = 1; i < s.values.size(); ++i) EXPECT_GT(s.values[i], s.values[i - 1]);
    EXPECT_THROW(spectrum(m, 201), std::invalid_argument);
    EXPECT_GT(s.max_iterations, 0);
}

TEST(Spectrum, SecondOrderConvergence) {
    const auto p = PhysicalParams::natural(1.0);
    const double exact = 0.5 + kPi * kPi / 2.0;
    const auto coarse = spectrum(build_operator(p, Potential::box(), unit_box(201)), 1).values[0];
    const auto fine = spectrum(build_operator(p, Potential::box(), unit_box(201).refined()), 1).values[0];
    const double ratio = (coarse - exact) / (fine - exact);
    EXPECT_NEAR(ratio, 4.0, 0.8);
}

TEST(Spectrum, DirectDiscretisationConverges) {
    const double kinetic = 0.5, xi = 1.0;
    const auto s = richardson_spectrum(
        [&](const GridSpec& g) { return build_direct_operator(kinetic, xi, {}, g); }, unit_box(), 3);
    for (int n = 1; n <= 3; ++n) EXPECT_NEAR(s.values[n - 1], 0.5 + kPi * kPi * n * n / 2.0, 1e-6 * n * n * 5);
}

TEST(ShiftLaw, BoxUnitDamping) {
    EXPECT_LT(spectral_shift_check(PhysicalParams::natural(1.0), Potential::box()), 1e-8);
    EXPECT_LT(spectral_shift_check_direct(PhysicalParams::natural(1.0), Potential::box()), 1e-8);
    for (double s : level_shifts(PhysicalParams::natural(1.0), Potential::box(), Discretisation::Direct)) {
        EXPECT_NEAR(s, 0.5, 1e-8);
    }
}

TEST(ShiftLaw, BoxStrongDamping) {
    const auto p = PhysicalParams::natural(0.5);  // xi = 2, shift 2
    EXPECT_LT(spectral_shift_check_direct(p, Potential::box()), 1e-8);
    EXPECT_NEAR(level_shifts(p, Potential::box(), Discretisation::Direct)[0], 2.0, 1e-8);
}

TEST(ShiftLaw, VanishingDamping) {
    EXPECT_LT(spectral_shift_check(PhysicalParams::natural(1e200), Potential::box()), 1e-12);
    EXPECT_LT(spectral_shift_check_direct(PhysicalParams::natural(1e200), Potential::box()), 1e-9);
}

TEST(ShiftLaw, HarmonicPhysicalEquation) {
    EXPECT_LT(spectral_shift_check_direct(PhysicalParams::natural(1.0 / std::sqrt(8.0)), Potential::harmonic()), 1e-8);
}

TEST(ShiftLaw, CustomPotentialNeedsGrid) {
    EXPECT_THROW(spectral_shift_check(PhysicalParams::natural(1.0), Potential::custom({})), std::invalid_argument);
    const GridSpec g(-3.0, 3.0, 2001);
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) v[i] = std::pow(g.x(i), 4);
    EXPECT_LT(spectral_shift_check(PhysicalParams::natural(1.0), Potential::custom(v), g), 1e-9);
}

TEST(Eigenfunction, MatchesDampedBoxState) {
    const auto p = PhysicalParams::natural(1.0);
    const auto grid = unit_box(2001);
    const auto m = build_operator(p, Potential::box(), grid);
    for (int n = 1; n <= 3; ++n) {
        // level n of the closed form with k = 2 pi n / L is grid level 2n
        const auto numeric = eigenfunction(m, 2 * n - 1);
        auto closed = box_eigenfunction(p, n, grid);
        const complex sign = inner_product(closed, numeric).real() < 0 ? -1.0 : 1.0;
        for (auto& v : closed.values) v *= sign;
        EXPECT_LT(sup_distance(numeric, closed), 1e-4) << "n=" << n;
    }
}

TEST(Eigenfunction, MatchesDampedOscillatorState) {
    const double g = std::sqrt(8.0);
    const auto y = oscillator_y_grid(g, 4001);
    const auto m = build_oscillator_operator(g, y);
    const auto p = PhysicalParams::natural(1.0 / std::sqrt(8.0));
    for (int n = 0; n <= 3; ++n) {
        const auto numeric = eigenfunction(m, n);
        auto closed = osc_eigenfunction(p, Convention::Reduced, n, y);  // b = 1, so x = y
        const complex sign = inner_product(closed, numeric).real() < 0 ? -1.0 : 1.0;
        for (auto& v : closed.values) v *= sign;
        EXPECT_LT(sup_distance(numeric, closed), 1e-4) << "n=" << n;
    }
}

TEST(Eigenfunction, GroundPeakWithinOneCell) {
    for (double g : {1.0, std::sqrt(8.0), 5.0}) {
        const auto y = oscillator_y_grid(g, 4001);
        EXPECT_NEAR(peak_location(eigenfunction(build_oscillator_operator(g, y), 0)), -0.5 * g, y.step());
    }
}

TEST(InnerProduct, Examples) {
    const auto p = PhysicalParams::natural(1.0);
    const auto grid = unit_box(4001);
    const auto psi1 = box_eigenfunction(p, 1, grid);
    const auto psi2 = box_eigenfunction(p, 2, grid);
    EXPECT_NEAR(inner_product(psi1, psi2, Weight::exponential(2.0)).real(), 0.0, 1e-10);
    EXPECT_NEAR(inner_product(psi1, psi1, Weight::exponential(2.0)).real(),
                std::pow(box_normalization(p, 1), 2) / 2.0, 1e-9);

    const auto rest = PhysicalParams::natural(1.0 / std::sqrt(8.0));
    const auto scales = derive_scales(rest, Convention::Reduced);
    const auto wide = oscillator_grid(scales, 8001, 14.0);
    const auto p0 = osc_eigenfunction(rest, Convention::Reduced, 0, wide);
    const auto p1 = osc_eigenfunction(rest, Convention::Reduced, 1, wide);
    EXPECT_NEAR(inner_product(p0, p0).real(), 1.0, 1e-9);
    const double expected = -2.0 * scales.mu * std::sqrt(kPi) * osc_normalization(rest, 0, scales.mu) *
                            osc_normalization(rest, 1, scales.mu) / scales.b;
    EXPECT_NEAR(inner_product(p0, p1).real(), expected, 1e-10);
    EXPECT_THROW(inner_product(p0, psi1), std::invalid_argument);
}

TEST(PeakLocation, ParabolaRefinement) {
    const GridSpec g(-1.0, 1.0, 21);
    const auto w = WaveSample::sample(g, [](double x) { return complex{1.0 - (x - 0.033) * (x - 0.033), 0.0}; });
    EXPECT_NEAR(peak_location(w), 0.033, 1e-12);
}
