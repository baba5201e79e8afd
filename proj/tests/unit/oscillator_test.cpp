#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fracschrod/oscillator.hpp"
#include "fracschrod/quadrature.hpp"

using namespace fracschrod;

namespace {

const double kSqrt8 = std::sqrt(8.0);
const double kSqrtPi = std::sqrt(std::numbers::pi);

PhysicalParams rest_params() { return PhysicalParams::natural(1.0 / kSqrt8); }

// Explicit physicists' Hermite polynomials up to degree 4.
double hermite_explicit(int n, double y) {
    switch (n) {
        case 0: return 1.0;
        case 1: return 2.0 * y;
        case 2: return 4.0 * y * y - 2.0;
        case 3: return 8.0 * y * y * y - 12.0 * y;
        case 4: return 16.0 * std::pow(y, 4) - 48.0 * y * y + 12.0;
    }
    return NAN;
}

double hermite_recurrence(int n, double y) {
    double prev = 1.0, cur = 2.0 * y;
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * y * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// The normalisation integral by brute-force Simpson on [-20, 20].
double pn_integral(int n, double mu) {
    const int steps = 8000;
    const double a = -20.0, b = 20.0, h = (b - a) / steps;
    auto f = [&](double t) {
        const double hn = hermite_recurrence(n, t - mu);
        return hn * hn * std::exp(-t * t);
    };
    double s = f(a) + f(b);
    for (int i = 1; i < steps; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0 / (std::pow(2.0, n) * kSqrtPi);
}

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

TEST(SeriesRatio, Examples) {
    EXPECT_NEAR(series_ratio(0, 1.5, kSqrt8), 0.0, 1e-15);  // sqrt(8)^2 rounds above 8
    EXPECT_EQ(series_ratio(0, 0.5, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(series_ratio(1, 0.5, 0.0), 1.0 / 3.0);
}

TEST(SeriesRatio, VanishesExactlyAtEveryLevel) {
    for (double g : {0.0, 0.3, 1.0, kSqrt8, 2 * kSqrt8, 7.77}) {
        for (int n = 0; n <= 40; ++n) EXPECT_EQ(series_ratio(n, oscillator_level(n, g), g), 0.0);
    }
}

TEST(QuantizeOscillator, ReducedAtRestDamping) {
    const auto s = quantize_oscillator(rest_params(), Convention::Reduced, 5);
    ASSERT_EQ(s.levels.size(), 6u);
    EXPECT_DOUBLE_EQ(s.levels[0].eps, 1.5);
    for (const auto& l : s.levels) {
        EXPECT_NEAR(l.energy, 1.0 + (l.n + 0.5), 2e-15 * l.energy);
    }
}

TEST(QuantizeOscillator, ConsistentAtRestDamping) {
    EXPECT_NEAR(quantize_oscillator(rest_params(), Convention::Consistent, 0).levels[0].eps, 4.5, 1e-13);
}

TEST(QuantizeOscillator, Undamped) {
    const auto s = quantize_oscillator(PhysicalParams::natural(1e20), Convention::Reduced, 4);
    for (const auto& l : s.levels) EXPECT_NEAR(l.eps, l.n + 0.5, 1e-15);
}

TEST(QuantizeOscillator, EnergyIsHbarOmegaEps) {
    PhysicalParams p = PhysicalParams::natural(0.9, 2.5);
    p.hbar = 0.7;
    for (const auto& l : quantize_oscillator(p, Convention::Consistent, 3).levels) {
        EXPECT_DOUBLE_EQ(l.energy, p.hbar * p.omega * l.eps);
    }
}

TEST(PnPolynomial, LowOrderValues) {
    EXPECT_EQ(pn_polynomial(1).exact(1), 3);
    EXPECT_EQ(pn_polynomial(2).exact(1), 14);
    EXPECT_EQ(pn_polynomial(3).exact(1), 86);
    const auto p1 = pn_polynomial(1);
    ASSERT_EQ(p1.coeffs.size(), 2u);
    EXPECT_EQ(p1.coeffs[0], 1);
    EXPECT_EQ(p1.coeffs[1], 2);
}

TEST(PnPolynomial, EndCoefficients) {
    BigInt fact = 1;
    for (int n = 0; n <= 40; ++n) {
        if (n > 0) fact *= n;
        const auto p = pn_polynomial(n);
        ASSERT_EQ(p.coeffs.size(), static_cast<std::size_t>(n + 1));
        EXPECT_EQ(p.coeffs.front(), fact);
        EXPECT_EQ(p.coeffs.back(), BigInt(1) << n);
        EXPECT_EQ(p.exact(0), fact);
    }
}

TEST(PnPolynomial, AgreesWithGaussHermiteOracle) {
    for (double mu : {0.0, 0.5, 1.0, std::numbers::sqrt2}) {
        for (int n = 0; n <= 10; ++n) {
            const double oracle = pn_oracle(n, mu);
            EXPECT_NEAR(pn_polynomial(n)(mu), oracle, 1e-9 * oracle) << "n=" << n << " mu=" << mu;
        }
    }
}

TEST(PnOracle, AgreesWithDirectIntegral) {
    for (double mu : {0.0, 0.7, 1.3}) {
        for (int n = 0; n <= 6; ++n) {
            const double direct = pn_integral(n, mu);
            EXPECT_NEAR(pn_oracle(n, mu), direct, 1e-9 * direct);
        }
    }
    EXPECT_NEAR(pn_oracle(0, 3.3), 1.0, 1e-13);
    EXPECT_NEAR(pn_oracle(2, 1.0), 14.0, 1e-10);
    EXPECT_NEAR(pn_oracle(3, 1.0), 86.0, 1e-10);
}

TEST(Hermite, MatchesExplicitAndParity) {
    for (int n = 0; n <= 4; ++n) {
        for (double y : {-1.7, -0.2, 0.0, 0.9, 2.4}) {
            EXPECT_NEAR(hermite(n, y), hermite_explicit(n, y), 1e-12 * (1 + std::abs(hermite_explicit(n, y))));
            EXPECT_DOUBLE_EQ(hermite(n, -y), (n % 2 ? -1.0 : 1.0) * hermite(n, y));
        }
    }
}

TEST(OscNormalization, Limits) {
    const auto p = PhysicalParams::natural(1.0, 1.0);
    for (int n = 0; n <= 6; ++n) {
        const double expected = std::pow(1.0 / (std::numbers::pi * std::pow(2.0, 2 * n)), 0.25) / std::sqrt(factorial(n));
        EXPECT_NEAR(osc_normalization(p, n, 0.0), expected, 1e-14);
    }
    PhysicalParams q = PhysicalParams::natural(1.0, 3.0);
    q.mass = 2.0;
    EXPECT_NEAR(osc_normalization(q, 0, 1.234), std::pow(6.0 / std::numbers::pi, 0.25), 1e-14);
}

TEST(OscNormalization, RestDampingFirstLevel) {
    const double a1 = osc_normalization(PhysicalParams::natural(1.0), 1, std::numbers::sqrt2);
    EXPECT_NEAR(a1, 0.23753, 1e-5);
}

TEST(OscEigenfunction, UnitNormUnderQuadrature) {
    for (double mu : {0.0, 0.5, std::numbers::sqrt2, 3.0}) {
        for (int n = 0; n <= 8; ++n) {
            const auto psi = osc_eigenfunction(PhysicalParams::natural(1.0, 1.7), mu, n);
            EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-9);
            // independent Simpson check
            const double c = -mu / psi.b, w = 16.0 / psi.b;
            const int steps = 6000;
            const double h = 2 * w / steps;
            double s = 0.0;
            for (int i = 0; i <= steps; ++i) {
                const double x = c - w + i * h;
                const double v = psi(x) * psi(x);
                s += (i == 0 || i == steps ? 1.0 : (i % 2 ? 4.0 : 2.0)) * v;
            }
            EXPECT_NEAR(s * h / 3.0, 1.0, 1e-9);
        }
    }
}

TEST(OscEigenfunction, GroundPeakAtMinusMu) {
    const auto psi = osc_eigenfunction(rest_params(), Convention::Reduced, 0);
    const double peak = -std::numbers::sqrt2 / psi.b;
    EXPECT_NEAR(psi.derivative(peak), 0.0, 1e-14);
    EXPECT_GT(psi(peak), psi(peak + 1e-3));
    EXPECT_GT(psi(peak), psi(peak - 1e-3));
}

TEST(OscEigenfunction, UndampedStandardStates) {
    const auto p = PhysicalParams::natural(1e20);
    for (int n = 0; n <= 4; ++n) {
        const auto psi = osc_eigenfunction(p, Convention::Reduced, n);
        const double a = std::pow(std::numbers::pi, -0.25) / std::sqrt(std::pow(2.0, n) * factorial(n));
        for (double y : {-2.0, -0.5, 0.0, 1.1}) {
            EXPECT_NEAR(psi(y), a * hermite_explicit(n, y) * std::exp(-0.5 * y * y), 1e-12);
        }
    }
}

TEST(OscEigenfunction, ResidualOfDimensionlessEquation) {
    for (double g : {0.0, kSqrt8, 2 * kSqrt8}) {
        for (int n = 0; n <= 5; ++n) {
            const GridSpec y(-0.5 * g - 10.0, 10.0 - 0.5 * g, static_cast<std::size_t>(std::llround(20.0 / 1e-3)) + 1);
            EXPECT_LT(oscillator_residual(n, g, y), 1e-6) << "g=" << g << " n=" << n;
        }
    }
}

TEST(OscEigenfunction, WeightedOrthogonalityAndUnweightedOverlap) {
    const auto p = rest_params();
    const double mu = std::numbers::sqrt2, g = 2 * mu;
    auto overlap = [&](int m, int n, bool weighted) {
        const auto a = osc_eigenfunction(p, mu, m), b = osc_eigenfunction(p, mu, n);
        const int steps = 8000;
        const double lo = (-mu - 15.0) / a.b, hi = (-mu + 15.0) / a.b, h = (hi - lo) / steps;
        double s = 0.0;
        for (int i = 0; i <= steps; ++i) {
            const double x = lo + i * h;
            const double w = weighted ? std::exp(g * a.b * x) : 1.0;
            s += (i == 0 || i == steps ? 1.0 : (i % 2 ? 4.0 : 2.0)) * a(x) * b(x) * w;
        }
        return s * h / 3.0;
    };
    for (int m = 0; m <= 3; ++m) {
        for (int n = m + 1; n <= 4; ++n) EXPECT_NEAR(overlap(m, n, true), 0.0, 1e-9);
    }
    const double a0 = osc_normalization(p, 0, mu), a1 = osc_normalization(p, 1, mu);
    EXPECT_NEAR(overlap(0, 1, false), -2.0 * mu * kSqrtPi * a0 * a1, 1e-10);
    EXPECT_GT(std::abs(overlap(0, 1, false)), 0.1);
}
