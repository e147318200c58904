#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "kink/analysis.hpp"
#include "kink/errors.hpp"
#include "kink/iteration.hpp"

namespace {

using namespace kink;

const SymmetricGrid& grid20()
{
    static const SymmetricGrid g(Grid(20.0, 401));
    return g;
}

TEST(CheckBound, Examples)
{
    const auto& g = grid20();
    const auto one = check_bound(FullLineFunction::constant(g, 1.0));
    EXPECT_TRUE(one.pass);
    EXPECT_EQ(one.margin, 0.0);
    const auto th = check_bound(tanh_reference(g));
    EXPECT_TRUE(th.pass);
    EXPECT_GT(th.margin, 0.0);
    const auto big = check_bound(FullLineFunction::constant(g, 1.5));
    EXPECT_FALSE(big.pass);
    EXPECT_DOUBLE_EQ(big.margin, -0.5);
}

TEST(TanhReference, Values)
{
    const SymmetricGrid g(Grid(std::sqrt(2.0) * 10.0, 11));
    const auto th = tanh_reference(g);
    EXPECT_EQ(th[g.origin()], 0.0);
    EXPECT_NEAR(th[g.origin() + 1], 0.76159415595576488812, 1e-15);
    EXPECT_NEAR(th[g.origin() - 1], -0.76159415595576488812, 1e-15);
    // 1 - tanh(x) = 2 exp(-2x) / (1 + exp(-2x))
    const double e = std::exp(-40.0 / std::sqrt(2.0));
    EXPECT_NEAR(1.0 - tanh_reference(grid20())[grid20().size() - 1], 2.0 * e / (1.0 + e), 1e-16);
}

TEST(ClassifyLimit, Examples)
{
    const auto& g = grid20();
    const auto one = classify_limit(FullLineFunction::constant(g, 1.0), 2.0);
    EXPECT_EQ(one.limit, 1);
    EXPECT_EQ(one.deviation, 0.0);
    const auto th = tanh_reference(g);
    EXPECT_EQ(classify_limit(th, 2.0).limit, 1);
    EXPECT_LE(classify_limit(th, 2.0).deviation, 0.02);
    EXPECT_EQ(classify_limit(th, 2.0, LineEnd::Left).limit, -1);
    const auto half = classify_limit(FullLineFunction::constant(g, 0.5), 2.0);
    EXPECT_EQ(half.limit, 0);
    EXPECT_DOUBLE_EQ(half.deviation, 0.5);
    EXPECT_THROW(classify_limit(th, 6.0), DomainError);
    EXPECT_THROW(classify_limit(th, 0.0), DomainError);
}

TEST(FixedPoints, ConstantsSolveEquation)
{
    for (double a : {0.1, 0.25, 0.5, 0.75, 1.0}) {
        const auto op = build_full_line_operator(a, grid20());
        const auto r = check_fixed_points(op);
        EXPECT_TRUE(r.pass) << a;
        EXPECT_LE(-r.margin, 1e-8);
    }
    const auto zero = check_equation_residual(FullLineFunction::constant(grid20(), 0.0),
                                              build_full_line_operator(0.5, grid20(), 0.0, 0.0), 0.0);
    EXPECT_EQ(zero.margin, 0.0);
}

TEST(ContinuityModulus, HoldsForKinkAndRandomData)
{
    const auto& g = grid20();
    const double h = g.spacing();
    const std::vector<double> deltas{h, 2 * h, 10 * h};
    const auto op = build_full_line_operator(1.0, g);
    EXPECT_TRUE(check_continuity_modulus(tanh_reference(g), op, deltas).pass);

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double a : {0.1, 0.5}) {
        const auto op_a = build_full_line_operator(a, g, u(rng), u(rng));
        std::vector<double> v(g.size());
        for (double& x : v) {
            x = u(rng);
        }
        EXPECT_TRUE(check_continuity_modulus(FullLineFunction(g, v), op_a, deltas).pass) << a;
    }
}

TEST(ContinuityModulus, NearlyTightForStep)
{
    // For sign(t) the difference at t = -delta/2 equals the bound exactly.
    const auto& g = grid20();
    const double h = g.spacing();
    const auto step = FullLineFunction::sample(g, [](double t) { return t > 0 ? 1.0 : (t < 0 ? -1.0 : 0.0); });
    const auto op = build_full_line_operator(0.5, g, -1.0, 1.0);
    const std::vector<double> two_h{2 * h};
    const auto r = check_continuity_modulus(step, op, two_h);
    EXPECT_TRUE(r.pass);
    EXPECT_LE(r.margin, 1e-3);
    EXPECT_EQ(r.location, g.origin() - 1);
}

TEST(ContinuityModulus, ConstantAndDegenerateDeltas)
{
    const auto& g = grid20();
    const auto op = build_full_line_operator(1.0, g, 1.0, 1.0);
    const auto one = FullLineFunction::constant(g, 1.0);
    const std::vector<double> zero{0.0};
    EXPECT_EQ(check_continuity_modulus(one, op, zero).margin, 0.0);
    const std::vector<double> bad{0.3 * g.spacing()};
    EXPECT_THROW(check_continuity_modulus(one, op, bad), DomainError);
}

TEST(IterateMonotonicity, Examples)
{
    const Grid g(20.0, 401);
    const auto op = build_half_line_operator(1.0, g);
    const auto phi0 = initial_iterate(1.0, g);
    const auto phi1 = iterate_once(op, phi0);
    const std::vector<HalfLineFunction> up{phi0, phi1};
    EXPECT_TRUE(check_iterate_monotonicity(up).pass);
    const std::vector<HalfLineFunction> same{phi0, phi0};
    EXPECT_EQ(check_iterate_monotonicity(same).margin, 0.0);
    const std::vector<HalfLineFunction> down{phi1, phi0};
    EXPECT_FALSE(check_iterate_monotonicity(down).pass);
}

TEST(SeedInequality, HoldsAcrossA)
{
    for (double a : {0.1, 0.25, 0.5, 0.75, 1.0}) {
        const auto r = check_seed_inequality(build_half_line_operator(a, Grid(20.0, 801)));
        EXPECT_TRUE(r.pass) << a;
    }
}

TEST(OperatorDecrease, ConstantSolutions)
{
    const auto& g = grid20();
    const auto r = check_operator_decrease(FullLineFunction::constant(g, 1.0),
                                           build_full_line_operator(1.0, g, 1.0, 1.0), 1e-8);
    EXPECT_TRUE(r.pass);
    EXPECT_LE(std::abs(r.margin), 1e-8);
    const auto z = check_operator_decrease(FullLineFunction::constant(g, 0.0),
                                           build_full_line_operator(1.0, g, 0.0, 0.0), 1e-8);
    EXPECT_EQ(z.margin, 0.0);
}

TEST(OperatorDecrease, Preconditions)
{
    const auto& g = grid20();
    EXPECT_THROW(check_operator_decrease(tanh_reference(g), build_full_line_operator(1.0, g), 1e-8),
                 PreconditionError);
    EXPECT_THROW(check_operator_decrease(FullLineFunction::constant(g, 0.5),
                                         build_full_line_operator(0.5, g, 1.0, 1.0), 1e-8),
                 PreconditionError);
}

TEST(FullLineRelaxation, NonnegativeSeedWithUnitTailsReachesOne)
{
    // A nonnegative solution with both tails at 1 can only be the constant 1.
    const auto& g = grid20();
    for (double a : {0.5, 1.0}) {
        const auto op = build_full_line_operator(a, g, 1.0, 1.0);
        const auto seed = FullLineFunction::sample(g, [](double t) { return 1.0 - 0.5 * std::exp(-t * t); });
        const auto limit = iterate_full_line(op, seed, 200);
        for (double v : limit.values()) {
            EXPECT_NEAR(v, 1.0, 1e-10);
        }
        EXPECT_TRUE(check_operator_decrease(limit, op, 1e-8).pass);

        std::vector<double> neg(limit.values().begin(), limit.values().end());
        for (double& v : neg) {
            v = -v;
        }
        EXPECT_TRUE(check_operator_decrease(FullLineFunction(g, neg), op.with_tail_values(-1.0, -1.0), 1e-8)
                        .pass);
    }
}

TEST(PropertySuite, PassesOnSolverOutputAndIsDeterministic)
{
    SolverConfig cfg;
    cfg.a = 0.5;
    const auto sol = solve(cfg);
    const auto report = run_property_suite(sol, cfg);
    for (const auto& e : report.entries()) {
        EXPECT_TRUE(e.pass) << e.name << " margin " << e.margin;
    }
    const auto again = run_property_suite(sol, cfg);
    ASSERT_EQ(again.entries().size(), report.entries().size());
    for (std::size_t i = 0; i < report.entries().size(); ++i) {
        EXPECT_EQ(again.entries()[i].margin, report.entries()[i].margin);
    }
}

TEST(StoredProfile, ConstantKinkAndOverflow)
{
    const auto& g = grid20();
    const auto one = check_stored_profile(FullLineFunction::constant(g, 1.0), 1.0, 1e-8);
    EXPECT_TRUE(one.all_pass());
    EXPECT_NE(one.find("operator_decrease"), nullptr);

    SolverConfig cfg;
    const auto sol = solve(cfg);
    const auto kink = check_stored_profile(sol.full_line, 1.0, 1e-8);
    EXPECT_TRUE(kink.all_pass());
    EXPECT_EQ(kink.find("operator_decrease"), nullptr);

    std::vector<double> edited(sol.full_line.values().begin(), sol.full_line.values().end());
    edited[g.origin() + 40] = 1.5;
    const auto bad = check_stored_profile(FullLineFunction(g, edited), 1.0, 1e-8);
    EXPECT_FALSE(bad.find("bound")->pass);
    EXPECT_FALSE(bad.all_pass());
}

}  // namespace
