#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fracschrod/params.hpp"

using namespace fracschrod;

TEST(DeriveScales, NaturalUnitsUnitDamping) {
    const auto s = derive_scales(PhysicalParams::natural(1.0), Convention::Reduced);
    EXPECT_DOUBLE_EQ(s.xi, 1.0);
    EXPECT_DOUBLE_EQ(s.eps_r, 1.0);
    EXPECT_DOUBLE_EQ(s.b, 1.0);
}

TEST(DeriveScales, ReducedAtOscillatorRestDamping) {
    const auto s = derive_scales(PhysicalParams::natural(1.0 / std::sqrt(8.0)), Convention::Reduced);
    EXPECT_NEAR(s.g, std::sqrt(8.0), 1e-14);
    EXPECT_NEAR(s.mu, std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(s.mu, std::sqrt(2.0 * s.eps_r), 1e-14);
}

TEST(DeriveScales, ConsistentAtOscillatorRestDamping) {
    // hand substitution y = b x into the damped equation: g = 2 xi / b
    const auto s = derive_scales(PhysicalParams::natural(1.0 / std::sqrt(8.0)), Convention::Consistent);
    EXPECT_NEAR(s.g, 2.0 * std::sqrt(8.0), 1e-13);
    EXPECT_NEAR(s.mu, std::sqrt(8.0), 1e-13);
}

TEST(DeriveScales, RejectsNonPositive) {
    PhysicalParams p;
    p.damping = 0.0;
    EXPECT_THROW(derive_scales(p, Convention::Reduced), std::invalid_argument);
    p = PhysicalParams{};
    p.hbar = -1.0;
    EXPECT_THROW(derive_scales(p, Convention::Reduced), std::invalid_argument);
    p = PhysicalParams{};
    p.omega = std::nan("");
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(DeriveScales, PhysicalUnits) {
    PhysicalParams p;
    p.mass = 2.0;
    p.c = 3.0;
    p.hbar = 0.5;
    p.damping = 4.0;
    p.omega = 8.0;
    const auto s = derive_scales(p, Convention::Reduced);
    EXPECT_DOUBLE_EQ(s.xi, 4.0 * 3.0 / (0.5 * 4.0));
    EXPECT_DOUBLE_EQ(s.eps_r, 2.0 * 9.0 / (0.5 * 8.0));
    EXPECT_DOUBLE_EQ(s.b, std::sqrt(2.0 * 8.0 / 0.5));
}

class ScaleProperties : public ::testing::Test {
protected:
    std::mt19937 rng{20240611};
    std::uniform_real_distribution<double> pos{0.1, 10.0};

    PhysicalParams random_params() {
        PhysicalParams p;
        p.mass = pos(rng);
        p.c = pos(rng);
        p.hbar = pos(rng);
        p.damping = pos(rng);
        p.omega = pos(rng);
        p.length = pos(rng);
        return p;
    }
};

TEST_F(ScaleProperties, DampingScalingDividesXi) {
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_params();
        const double k = 4.0;  // power of two keeps the division exact
        const double xi = derive_scales(p, Convention::Reduced).xi;
        const double scaled = derive_scales(p.with_damping(p.damping * k), Convention::Reduced).xi;
        EXPECT_EQ(scaled, xi / k);
    }
}

TEST_F(ScaleProperties, ConsistentIsTwiceReduced) {
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_params();
        const double r = derive_scales(p, Convention::Reduced).g;
        const double c = derive_scales(p, Convention::Consistent).g;
        EXPECT_NEAR(c, 2.0 * r, 1e-13 * c);
    }
}

TEST_F(ScaleProperties, UnderdampedMonotoneInEnergy) {
    std::uniform_real_distribution<double> energy{0.0, 20.0};
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_params();
        const double e1 = energy(rng);
        const double e2 = e1 + energy(rng);
        if (underdamped_condition(p, e1)) EXPECT_TRUE(underdamped_condition(p, e2));
    }
}

TEST(SpecialDamping, Values) {
    EXPECT_NEAR(special_damping_coefficient(Problem::Box), 0.70711, 1e-5);
    EXPECT_NEAR(special_damping_coefficient(Problem::Oscillator), 0.35355, 1e-5);
    EXPECT_NEAR(special_damping_coefficient(Problem::Box, 2.0), 1.41421, 1e-5);
}

TEST(Underdamped, Examples) {
    EXPECT_TRUE(underdamped_condition(PhysicalParams::natural(1.0), 1.0));
    EXPECT_FALSE(underdamped_condition(PhysicalParams::natural(1.0), 0.4));
    EXPECT_TRUE(underdamped_condition(0.0, 1e-6));
}

TEST(Convention, ParseRoundTrip) {
    for (auto c : {Convention::Reduced, Convention::Consistent}) EXPECT_EQ(parse_convention(to_string(c)), c);
    EXPECT_THROW(parse_convention("bogus"), std::invalid_argument);
}

TEST(DampingShift, NaturalUnits) {
    EXPECT_DOUBLE_EQ(damping_energy_shift(PhysicalParams::natural(1.0)), 0.5);
    EXPECT_DOUBLE_EQ(damping_energy_shift(PhysicalParams::natural(0.5)), 2.0);
}
