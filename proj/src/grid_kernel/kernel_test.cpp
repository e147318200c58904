#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "kink/errors.hpp"
#include "kink/kernel.hpp"
#include "oracles.hpp"

namespace {

using kink::kernel_full;
using kink::kernel_half;

TEST(KernelFull, FrozenValues)
{
    EXPECT_NEAR(kernel_full(1.0, 0.0, 0.0), 0.28209479177387814347, 1e-16);
    EXPECT_NEAR(kernel_full(1.0, 3.5, 3.5), 0.28209479177387814347, 1e-16);
    EXPECT_NEAR(kernel_full(0.25, 1.0, 0.0), 0.20755374871029735167, 1e-16);
}

TEST(KernelFull, SymmetricAndPeakedOnDiagonal)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ut(-10.0, 10.0), ua(0.01, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double a = ua(rng), t = ut(rng), s = ut(rng);
        EXPECT_EQ(kernel_full(a, t, s), kernel_full(a, s, t));
        EXPECT_LE(kernel_full(a, t, s), kernel_full(a, t, t));
        EXPECT_NEAR(kernel_full(a, t, s), static_cast<double>(oracle::gauss(a, t - s)), 1e-15);
    }
}

TEST(KernelFull, UnderflowIsFlushedToZero)
{
    EXPECT_EQ(kernel_full(0.01, 0.0, 100.0), 0.0);
}

TEST(KernelFull, RejectsInvalidA)
{
    EXPECT_THROW(kernel_full(0.0, 0.0, 0.0), kink::DomainError);
    EXPECT_THROW(kernel_full(-0.5, 0.0, 0.0), kink::DomainError);
    EXPECT_THROW(kernel_full(1.5, 0.0, 0.0), kink::DomainError);
    EXPECT_THROW(kernel_full(std::nan(""), 0.0, 0.0), kink::DomainError);
}

TEST(KernelHalf, FrozenValueAndBoundaryZeros)
{
    EXPECT_NEAR(kernel_half(1.0, 1.0, 1.0), 0.17831791741872946764, 1e-16);
    EXPECT_EQ(kernel_half(1.0, 0.0, 2.0), 0.0);
    EXPECT_EQ(kernel_half(0.3, 4.0, 0.0), 0.0);
}

TEST(KernelHalf, NonnegativeSymmetricAndMatchesDifference)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ut(0.0, 15.0), ua(0.01, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = ua(rng), t = ut(rng), s = ut(rng);
        const double k = kernel_half(a, t, s);
        EXPECT_GE(k, 0.0);
        EXPECT_NEAR(k, kernel_half(a, s, t), 1e-16);
        EXPECT_NEAR(k, static_cast<double>(oracle::half_kernel(a, t, s)), 1e-15);
    }
}

TEST(KernelHalf, RejectsNegativeArguments)
{
    EXPECT_THROW(kernel_half(1.0, -0.1, 1.0), kink::DomainError);
    EXPECT_THROW(kernel_half(1.0, 1.0, -0.1), kink::DomainError);
}

}  // namespace
