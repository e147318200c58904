#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "kink/cubic.hpp"
#include "kink/errors.hpp"

namespace {

using kink::CubicParams;

TEST(Cubic, ExactCases)
{
    EXPECT_NEAR(kink::solve_closed_form({1.0, 8.0}), 2.0, 1e-12);
    EXPECT_NEAR(kink::solve_closed_form({0.5, 1.0}), 1.0, 1e-12);
    EXPECT_EQ(kink::solve_closed_form({0.3, 0.0}), 0.0);
    EXPECT_NEAR(kink::solve_robust({1.0, -8.0}), -2.0, 1e-12);
    EXPECT_NEAR(kink::solve_robust({0.5, 1.0}), 1.0, 1e-12);
}

TEST(Cubic, ForwardConstructedRoot)
{
    // B = 0.3 * 0.4^3 + 0.7 * 0.4 = 0.2992
    EXPECT_NEAR(kink::solve_closed_form({0.3, 0.2992}), 0.4, 1e-12);
    EXPECT_NEAR(kink::solve_robust({0.3, 0.2992}), 0.4, 1e-12);
}

TEST(Cubic, ClosedFormAgreesWithRobustSolver)
{
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> ua(1e-3, 1.0), ub(-1.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const CubicParams p{ua(rng), ub(rng)};
        worst = std::max(worst, std::abs(kink::solve_closed_form(p) - kink::solve_robust(p)));
    }
    EXPECT_LE(worst, 1e-9);
}

TEST(Cubic, RootSatisfiesEquation)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ua(1e-4, 1.0), ub(-50.0, 50.0);
    for (int i = 0; i < 2000; ++i) {
        const CubicParams p{ua(rng), ub(rng)};
        const double phi = kink::invert_cubic(p);
        EXPECT_LE(std::abs(kink::cubic_residual(p, phi)), kink::cubic_residual_tolerance(p.rhs));
        // Round trip through the forward map.
        EXPECT_NEAR(kink::invert_cubic({p.a, kink::cubic_map(p.a, phi)}), phi,
                    1e-12 * std::max(1.0, std::abs(phi)));
    }
}

TEST(Cubic, StrictlyIncreasingOddAndUnitIntervalPreserving)
{
    for (double a : {0.05, 0.25, 0.5, 0.75, 1.0}) {
        double prev = -std::numeric_limits<double>::infinity();
        for (int k = -200; k <= 200; ++k) {
            const double b = k * 0.005;
            const double phi = kink::invert_cubic({a, b});
            EXPECT_GT(phi, prev);
            EXPECT_EQ(phi, -kink::invert_cubic({a, -b}));
            EXPECT_EQ(std::signbit(phi) && phi != 0.0, b < 0.0);
            if (b >= 0.0) {
                EXPECT_GE(phi, 0.0);
                EXPECT_LE(phi, 1.0 + 1e-15);
            }
            prev = phi;
        }
        EXPECT_NEAR(kink::invert_cubic({a, 1.0}), 1.0, 1e-14);
    }
}

TEST(Cubic, FallsBackWhenClosedFormOverflows)
{
    const CubicParams p{1e-300, 0.5};
    EXPECT_THROW(kink::solve_closed_form(p), kink::NumericError);
    EXPECT_NEAR(kink::invert_cubic(p), 0.5, 1e-14);
}

TEST(Cubic, RejectsInvalidInput)
{
    EXPECT_THROW(kink::invert_cubic({0.0, 0.5}), kink::DomainError);
    EXPECT_THROW(kink::invert_cubic({1.2, 0.5}), kink::DomainError);
    EXPECT_THROW(kink::invert_cubic({0.5, std::nan("")}), kink::DomainError);
    EXPECT_THROW(kink::solve_robust({0.5, 0.5}, 0.0), kink::DomainError);
}

}  // namespace
