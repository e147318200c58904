#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kink/grid.hpp"
#include "kink/iteration.hpp"
#include "kink/operator.hpp"

namespace kink {

/// Outcome of one property check. `margin` is the signed distance to a
/// violation, so pass == (margin >= -tolerance).
struct CheckResult {
    std::string name;
    bool pass;
    double margin;
    std::size_t location;  // grid index of the worst case
    double tolerance;
};

CheckResult make_check(std::string name, double margin, std::size_t location, double tolerance);

class PropertyReport {
public:
    void add(CheckResult r) { entries_.push_back(std::move(r)); }
    const std::vector<CheckResult>& entries() const noexcept { return entries_; }
    const CheckResult* find(const std::string& name) const;
    std::size_t passed() const;
    bool all_pass() const { return passed() == entries_.size(); }

private:
    std::vector<CheckResult> entries_;
};

/// 10x the operator's normalization deviation, floored at a few ulps.
double quadrature_budget(const FullLineOperator& op);

/// |Phi| <= 1 everywhere: margin = 1 - max |Phi|, tolerance 1e-10.
template <class GridT>
CheckResult check_bound(const GridFunction<GridT>& phi);

/// max |a Phi^3 + (1 - a) Phi - C_a Phi| as a check with the given tolerance.
CheckResult check_equation_residual(const FullLineFunction& phi, const FullLineOperator& op,
                                    double tolerance);

/// For a sign-definite near-solution: C_a Phi <= Phi if Phi >= 0, and
/// C_a Phi >= Phi if Phi <= 0. Throws PreconditionError when Phi changes
/// sign or its residual exceeds residual_tolerance + quadrature_budget(op).
CheckResult check_operator_decrease(const FullLineFunction& phi, const FullLineOperator& op,
                                    double residual_tolerance);

enum class LineEnd { Left, Right };

struct LimitClass {
    int limit;         // nearest of -1, 0, +1
    double deviation;  // |mean - limit|
    double mean;       // average over the window
};

/// Averages the last `window` time units at the requested end and rounds
/// to the nearest admissible asymptote. Requires 0 < window <= t_max / 4.
template <class GridT>
LimitClass classify_limit(const GridFunction<GridT>& phi, double window,
                          LineEnd end = LineEnd::Right);

/// Each constant b in {-1, 0, 1} solves the full-line equation with tails b.
CheckResult check_fixed_points(const FullLineOperator& op);

/// |C_a f(t + delta) - C_a f(t)| <= 2 M erf(|delta| / (4 sqrt a)) at every
/// node pair, with M the sup of |f| including the operator's tail values.
/// Each delta must be a multiple of the grid spacing. Tolerance 1e-8.
CheckResult check_continuity_modulus(const FullLineFunction& f, const FullLineOperator& op,
                                     std::span<const double> deltas);

/// Pointwise nondecreasing sequence: margin = min (later - earlier).
CheckResult check_iterate_monotonicity(std::span<const HalfLineFunction> snapshots);

/// a phi0^3 + (1 - a) phi0 <= K_a phi0, evaluated with tail value 1/2.
CheckResult check_seed_inequality(const HalfLineOperator& op);

/// tanh(t / sqrt 2), the kink of the local (second-order) approximation.
FullLineFunction tanh_reference(const SymmetricGrid& grid);

/// Runs `iterations` steps of the nodewise cubic inversion of C_a on the
/// full line. Verification aid only; the solver itself works on the half-line.
FullLineFunction iterate_full_line(const FullLineOperator& op, FullLineFunction seed,
                                   std::size_t iterations);

/// Every check applicable to a finished solver run.
PropertyReport run_property_suite(const SolutionProfile& solution, const SolverConfig& config);

/// Checks that need only a stored full-line profile and the parameter a.
PropertyReport check_stored_profile(const FullLineFunction& profile, double a,
                                    double residual_tolerance);

}  // namespace kink
