#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "fracschrod/fracderiv.hpp"

using namespace fracschrod;

namespace {

const FracOrder kHalf(0.5);

SampledFunction power(double p, double dx, double x_end = 1.0) {
    const auto count = static_cast<std::size_t>(std::llround(x_end / dx)) + 1;
    return SampledFunction::sample([p](double x) { return std::pow(x, p); }, 0.0, dx, count);
}

// Riemann-Liouville derivative of x^p computed here from Euler's gamma, kept
// apart from the library's own power rule.
double rl_power(double p, double alpha, double x) {
    return std::tgamma(p + 1.0) / std::tgamma(p + 1.0 - alpha) * std::pow(x, p - alpha);
}

}  // namespace

TEST(GlDerivative, HalfDerivativeOfX) {
    EXPECT_NEAR(gl_derivative(power(1, 1e-4), kHalf, 1.0), 2.0 / std::sqrt(std::numbers::pi), 1e-3);
}

TEST(GlDerivative, HalfDerivativeOfConstant) {
    EXPECT_NEAR(gl_derivative(power(0, 1e-4), kHalf, 1.0), 1.0 / std::sqrt(std::numbers::pi), 1e-3);
}

TEST(GlDerivative, FirstDerivativeOfSquare) {
    EXPECT_NEAR(gl_derivative(power(2, 1e-4), FracOrder(1.0), 1.0), 2.0, 1e-3);
}

TEST(GlDerivative, RejectsOffGridAndTerminal) {
    const auto f = power(1, 0.01);
    EXPECT_THROW(gl_derivative(f, kHalf, 0.005), std::out_of_range);
    EXPECT_THROW(gl_derivative(f, kHalf, 2.0), std::out_of_range);
    EXPECT_THROW(gl_derivative(f, kHalf, 0.0), std::out_of_range);
}

TEST(FracOrder, Range) {
    EXPECT_THROW(FracOrder(0.0), std::invalid_argument);
    EXPECT_THROW(FracOrder(1.5), std::invalid_argument);
    EXPECT_THROW(FracOrder(-0.5), std::invalid_argument);
    EXPECT_NO_THROW(FracOrder(1.0));
}

TEST(SampledFunction, NeedsFourSamples) {
    EXPECT_THROW(SampledFunction::sample([](double x) { return x; }, 0.0, 0.1, 3), std::invalid_argument);
    EXPECT_THROW(SampledFunction::sample([](double x) { return x; }, 0.0, 0.0, 10), std::invalid_argument);
}

TEST(PowerRule, Examples) {
    EXPECT_NEAR(power_rule_oracle(1, kHalf, 1.0), 2.0 / std::sqrt(std::numbers::pi), 1e-15);
    EXPECT_NEAR(power_rule_oracle(0, kHalf, 4.0), 0.5 / std::sqrt(std::numbers::pi), 1e-15);
    EXPECT_NEAR(power_rule_oracle(2, FracOrder(1.0), 3.0), 6.0, 1e-13);
    EXPECT_EQ(power_rule_oracle(0, FracOrder(1.0), 2.0), 0.0);  // pole of Gamma(0)
}

TEST(Semigroup, LinearFunction) {
    double previous = INFINITY;
    for (double dx : {4e-3, 2e-3, 1e-3}) {
        const double r = semigroup_residual(power(1, dx, 1.0 + dx), 1.0);
        EXPECT_LT(r, 5e-2);
        EXPECT_LE(r, previous + 1e-12);
        previous = r;
    }
}

TEST(Semigroup, SquareAgainstTolerance) {
    for (double dx : {4e-3, 2e-3, 1e-3}) {
        EXPECT_LT(semigroup_residual(power(2, dx, 1.0 + dx), 1.0), 10.0 * std::sqrt(dx));
    }
}

TEST(Semigroup, ConstantIsAnnihilated) {
    EXPECT_LT(semigroup_residual(power(0, 1e-3, 1.001), 1.0), 1e-9);
}

TEST(Semigroup, GridChecks) {
    const auto f = power(1, 0.1, 1.0);
    EXPECT_THROW(semigroup_residual(f, 0.5), std::invalid_argument);  // 6 nodes up to x
    EXPECT_THROW(semigroup_residual(f, 1.0), std::out_of_range);      // last node
}

TEST(Semigroup, ObservedOrderOnSquare) {
    const double r1 = semigroup_residual(power(2, 2e-3, 1.002), 1.0);
    const double r2 = semigroup_residual(power(2, 1e-3, 1.001), 1.0);
    EXPECT_GE(std::log2(r1 / r2), 0.5);
}

TEST(GlDerivative, ErrorShrinksLinearly) {
    for (double p : {1.0, 2.0, 3.0}) {
        const double exact = rl_power(p, 0.5, 1.0);
        const double e1 = std::abs(gl_derivative(power(p, 2e-3), kHalf, 1.0) - exact);
        const double e2 = std::abs(gl_derivative(power(p, 1e-3), kHalf, 1.0) - exact);
        EXPECT_GT(e1 / e2, 1.8) << "p = " << p;
    }
}

TEST(GlDerivative, Linearity) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    const double dx = 1e-3;
    const auto f = power(1.5, dx);
    const auto g = SampledFunction::sample([](double x) { return std::sin(3.0 * x); }, 0.0, dx, 1001);
    for (int trial = 0; trial < 20; ++trial) {
        const double a = coeff(rng), b = coeff(rng);
        SampledFunction h = f;
        for (std::size_t i = 0; i < h.values.size(); ++i) h.values[i] = a * f.values[i] + b * g.values[i];
        const double lhs = gl_derivative(h, kHalf, 0.7);
        const double rhs = a * gl_derivative(f, kHalf, 0.7) + b * gl_derivative(g, kHalf, 0.7);
        EXPECT_NEAR(lhs, rhs, 1e-11 * (1.0 + std::abs(rhs)));
    }
}

TEST(GlDerivative, OrderOneIsBackwardDifference) {
    const auto f = SampledFunction::sample([](double x) { return std::exp(x); }, 0.0, 1e-3, 1001);
    const FracOrder one(1.0);
    for (double x : {0.1, 0.5, 1.0}) {
        const std::size_t i = f.index_of(x);
        const double backward = (f.values[i] - f.values[i - 1]) / f.dx;
        EXPECT_NEAR(gl_derivative(f, one, x), backward, 1e-9);
        EXPECT_NEAR(gl_derivative(f, one, x), std::exp(x), 2e-3);
    }
}

TEST(GlDerivative, AllNodesMatchesPointwise) {
    const auto f = power(2, 0.01);
    const auto all = gl_derivative_all(f, kHalf);
    for (double x : {0.05, 0.5, 1.0}) EXPECT_DOUBLE_EQ(all.values[f.index_of(x)], gl_derivative(f, kHalf, x));
}

TEST(GlWeights, Recurrence) {
    const auto w = gl_weights(kHalf, 4);
    EXPECT_DOUBLE_EQ(w[0], 1.0);
    EXPECT_DOUBLE_EQ(w[1], -0.5);
    EXPECT_DOUBLE_EQ(w[2], -0.125);
    EXPECT_DOUBLE_EQ(w[3], -0.0625);
}

TEST(ReadSampledCsv, RoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "fracschrod_sampled.csv";
    {
        std::ofstream out(path);
        out << "x,value\n";
        for (int i = 0; i <= 10; ++i) out << 0.1 * i << ',' << 0.1 * i << '\n';
    }
    const auto f = read_sampled_csv(path);
    EXPECT_EQ(f.values.size(), 11u);
    EXPECT_NEAR(f.dx, 0.1, 1e-15);
    {
        std::ofstream out(path);
        out << "x,value\n0,0\n0.1,1\n0.3,2\n0.4,3\n";
    }
    EXPECT_THROW(read_sampled_csv(path), std::runtime_error);
    std::filesystem::remove(path);
}
