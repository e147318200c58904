#include "kink/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "kink/cubic.hpp"
#include "kink/errors.hpp"
#include "kink/special.hpp"

namespace kink {

CheckResult make_check(std::string name, double margin, std::size_t location, double tolerance)
{
    return CheckResult{std::move(name), margin >= -tolerance, margin, location, tolerance};
}

const CheckResult* PropertyReport::find(const std::string& name) const
{
    for (const auto& e : entries_) {
        if (e.name == name) {
            return &e;
        }
    }
    return nullptr;
}

std::size_t PropertyReport::passed() const
{
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const CheckResult& e) { return e.pass; }));
}

double quadrature_budget(const FullLineOperator& op)
{
    return std::max(10.0 * op.normalization_deviation(),
                    16.0 * std::numeric_limits<double>::epsilon());
}

template <class GridT>
CheckResult check_bound(const GridFunction<GridT>& phi)
{
    double worst = 0.0;
    std::size_t at = 0;
    for (std::size_t k = 0; k < phi.size(); ++k) {
        if (std::abs(phi[k]) > worst) {
            worst = std::abs(phi[k]);
            at = k;
        }
    }
    return make_check("bound", 1.0 - worst, at, 1e-10);
}

template CheckResult check_bound(const HalfLineFunction&);
template CheckResult check_bound(const FullLineFunction&);

namespace {

// Largest |a Phi^3 + (1-a) Phi - C_a Phi| and where it occurs.
std::pair<double, std::size_t> max_residual(const FullLineFunction& phi, const FullLineOperator& op)
{
    const FullLineFunction image = op.apply(phi);
    double worst = 0.0;
    std::size_t at = 0;
    for (std::size_t k = 0; k < phi.size(); ++k) {
        const double r = std::abs(cubic_map(op.a(), phi[k]) - image[k]);
        if (r > worst) {
            worst = r;
            at = k;
        }
    }
    return {worst, at};
}

std::pair<double, std::size_t> max_residual(const HalfLineFunction& phi, const HalfLineOperator& op)
{
    const HalfLineFunction image = op.apply(phi);
    double worst = 0.0;
    std::size_t at = 0;
    for (std::size_t k = 0; k < phi.size(); ++k) {
        const double r = std::abs(cubic_map(op.a(), phi[k]) - image[k]);
        if (r > worst) {
            worst = r;
            at = k;
        }
    }
    return {worst, at};
}

}  // namespace

CheckResult check_equation_residual(const FullLineFunction& phi, const FullLineOperator& op,
                                    double tolerance)
{
    const auto [worst, at] = max_residual(phi, op);
    return make_check("equation_residual", -worst, at, tolerance);
}

CheckResult check_operator_decrease(const FullLineFunction& phi, const FullLineOperator& op,
                                    double residual_tolerance)
{
    const auto v = phi.values();
    const bool nonnegative = std::all_of(v.begin(), v.end(), [](double x) { return x >= 0.0; });
    const bool nonpositive = std::all_of(v.begin(), v.end(), [](double x) { return x <= 0.0; });
    if (!nonnegative && !nonpositive) {
        throw PreconditionError("operator decrease: profile changes sign");
    }
    const double tolerance = residual_tolerance + quadrature_budget(op);
    if (max_residual(phi, op).first > tolerance) {
        throw PreconditionError("operator decrease: profile is not a near-solution");
    }

    const FullLineFunction image = op.apply(phi);
    const double sign = nonnegative ? 1.0 : -1.0;
    double margin = std::numeric_limits<double>::infinity();
    std::size_t at = 0;
    for (std::size_t k = 0; k < phi.size(); ++k) {
        const double m = sign * (phi[k] - image[k]);
        if (m < margin) {
            margin = m;
            at = k;
        }
    }
    return make_check("operator_decrease", margin, at, tolerance);
}

template <class GridT>
LimitClass classify_limit(const GridFunction<GridT>& phi, double window, LineEnd end)
{
    const double t_max = phi.grid().t_max();
    if (!(window > 0.0 && window <= t_max / 4.0)) {
        throw DomainError("classify_limit: window must lie in (0, t_max / 4]");
    }
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < phi.size(); ++k) {
        const double t = phi.grid().node(k);
        const bool inside = end == LineEnd::Right ? t >= t_max - window : t <= -t_max + window;
        if (inside) {
            sum += phi[k];
            ++count;
        }
    }
    if (count == 0) {
        throw DomainError("classify_limit: window holds no grid node");
    }
    const double mean = sum / static_cast<double>(count);

    LimitClass best{-1, std::abs(mean + 1.0), mean};
    for (int candidate : {0, 1}) {
        const double d = std::abs(mean - candidate);
        if (d < best.deviation) {
            best = LimitClass{candidate, d, mean};
        }
    }
    return best;
}

template LimitClass classify_limit(const HalfLineFunction&, double, LineEnd);
template LimitClass classify_limit(const FullLineFunction&, double, LineEnd);

CheckResult check_fixed_points(const FullLineOperator& op)
{
    double worst = 0.0;
    std::size_t at = 0;
    for (double b : {-1.0, 0.0, 1.0}) {
        const auto constant = FullLineFunction::constant(op.grid(), b);
        const auto [r, k] = max_residual(constant, op.with_tail_values(b, b));
        if (r > worst) {
            worst = r;
            at = k;
        }
    }
    return make_check("fixed_points", -worst, at, quadrature_budget(op));
}

CheckResult check_continuity_modulus(const FullLineFunction& f, const FullLineOperator& op,
                                     std::span<const double> deltas)
{
    const double h = f.grid().spacing();
    const double bound_scale =
        2.0 * std::max({f.sup_norm(), std::abs(op.tail_value_left()), std::abs(op.tail_value_right())});
    const FullLineFunction image = op.apply(f);
    const std::size_t n = image.size();

    double margin = std::numeric_limits<double>::infinity();
    std::size_t at = 0;
    for (double delta : deltas) {
        const double steps = std::round(std::abs(delta) / h);
        if (std::abs(std::abs(delta) / h - steps) > 1e-9 * std::max(1.0, steps)) {
            throw DomainError("continuity modulus: delta must be a multiple of the grid spacing");
        }
        const auto d = static_cast<std::size_t>(steps);
        const double bound = bound_scale * erf(std::abs(delta) / (4.0 * std::sqrt(op.a())));
        for (std::size_t i = 0; i + d < n; ++i) {
            const double m = bound - std::abs(image[i + d] - image[i]);
            if (m < margin) {
                margin = m;
                at = i;
            }
        }
    }
    if (deltas.empty()) {
        margin = 0.0;
    }
    return make_check("continuity_modulus", margin, at, 1e-8);
}

CheckResult check_iterate_monotonicity(std::span<const HalfLineFunction> snapshots)
{
    double margin = snapshots.size() < 2 ? 0.0 : std::numeric_limits<double>::infinity();
    std::size_t at = 0;
    for (std::size_t s = 1; s < snapshots.size(); ++s) {
        const auto& earlier = snapshots[s - 1];
        const auto& later = snapshots[s];
        if (!(earlier.grid() == later.grid())) {
            throw GridMismatchError("iterate monotonicity: snapshots on different grids");
        }
        for (std::size_t k = 0; k < later.size(); ++k) {
            const double m = later[k] - earlier[k];
            if (m < margin) {
                margin = m;
                at = k;
            }
        }
    }
    return make_check("iterate_monotonicity", margin, at, 1e-10);
}

CheckResult check_seed_inequality(const HalfLineOperator& op)
{
    const HalfLineFunction seed = initial_iterate(op.a(), op.grid());
    const HalfLineFunction image = op.with_tail_value(0.5).apply(seed);
    double margin = std::numeric_limits<double>::infinity();
    std::size_t at = 0;
    for (std::size_t k = 0; k < seed.size(); ++k) {
        const double m = image[k] - cubic_map(op.a(), seed[k]);
        if (m < margin) {
            margin = m;
            at = k;
        }
    }
    return make_check("seed_inequality", margin, at, 1e-8);
}

FullLineFunction tanh_reference(const SymmetricGrid& grid)
{
    return FullLineFunction::sample(grid, [](double t) { return std::tanh(t / std::sqrt(2.0)); });
}

FullLineFunction iterate_full_line(const FullLineOperator& op, FullLineFunction seed,
                                   std::size_t iterations)
{
    for (std::size_t n = 0; n < iterations; ++n) {
        const FullLineFunction image = op.apply(seed);
        std::vector<double> next(image.size());
        for (std::size_t k = 0; k < next.size(); ++k) {
            next[k] = invert_cubic({op.a(), image[k]});
        }
        seed = FullLineFunction(op.grid(), std::move(next));
    }
    return seed;
}

namespace {

double default_window(double t_max)
{
    return std::min(2.0, t_max / 4.0);
}

std::array<double, 3> default_deltas(double h)
{
    return {h, 2.0 * h, 10.0 * h};
}

}  // namespace

PropertyReport run_property_suite(const SolutionProfile& solution, const SolverConfig& config)
{
    const Grid grid = solution.half_line.grid();
    const HalfLineOperator half_op = build_half_line_operator(solution.a, grid, config.tail_value);
    const FullLineOperator full_op = build_full_line_operator(
        solution.a, SymmetricGrid(grid), -config.tail_value, config.tail_value);
    const double budget = quadrature_budget(full_op);

    PropertyReport report;
    report.add(check_bound(solution.full_line));

    const LimitClass limit = classify_limit(solution.half_line, default_window(grid.t_max()));
    report.add(make_check("limit", -std::abs(limit.mean - 1.0), grid.size() - 1, 0.02));

    // Every step of the run, not only the recorded snapshots.
    const HalfLineFunction seed = initial_iterate(solution.a, grid);
    const auto& records = solution.report.records;
    double step_margin = records.empty() ? 0.0 : std::numeric_limits<double>::infinity();
    double max_value = *std::max_element(seed.values().begin(), seed.values().end());
    double min_slope = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < seed.size(); ++k) {
        min_slope = std::min(min_slope, seed[k + 1] - seed[k]);
    }
    for (const auto& r : records) {
        step_margin = std::min(step_margin, r.min_monotonicity_margin);
        max_value = std::max(max_value, r.max_value);
        min_slope = std::min(min_slope, r.min_slope);
    }
    report.add(make_check("iterate_monotonicity", step_margin, 0, 1e-10));
    report.add(make_check("iterate_bound", 1.0 - max_value, 0, 1e-10));
    report.add(make_check("profile_monotone", min_slope, 0, 1e-10));

    report.add(check_seed_inequality(half_op));
    report.add(check_fixed_points(full_op));
    const auto deltas = default_deltas(grid.spacing());
    report.add(check_continuity_modulus(solution.full_line, full_op, deltas));

    const auto [half_residual, half_at] = max_residual(solution.half_line, half_op);
    report.add(make_check("limit_equation", -half_residual, half_at,
                          config.residual_tolerance + budget));
    const auto [full_residual, full_at] = max_residual(solution.full_line, full_op);
    report.add(make_check("reduction_consistency", -std::abs(full_residual - half_residual), full_at,
                          budget));
    return report;
}

PropertyReport check_stored_profile(const FullLineFunction& profile, double a,
                                    double residual_tolerance)
{
    const SymmetricGrid& grid = profile.grid();
    const double window = default_window(grid.t_max());
    const LimitClass left = classify_limit(profile, window, LineEnd::Left);
    const LimitClass right = classify_limit(profile, window, LineEnd::Right);
    const FullLineOperator op = build_full_line_operator(a, grid, left.limit, right.limit);
    const double budget = quadrature_budget(op);

    PropertyReport report;
    report.add(check_bound(profile));
    report.add(make_check("limit_left", -left.deviation, 0, 0.02));
    report.add(make_check("limit_right", -right.deviation, grid.size() - 1, 0.02));
    report.add(check_equation_residual(profile, op, residual_tolerance + budget));
    report.add(check_fixed_points(op));
    const auto deltas = default_deltas(grid.spacing());
    report.add(check_continuity_modulus(profile, op, deltas));

    const auto v = profile.values();
    const bool sign_definite = std::all_of(v.begin(), v.end(), [](double x) { return x >= 0.0; }) ||
                               std::all_of(v.begin(), v.end(), [](double x) { return x <= 0.0; });
    if (sign_definite && report.find("equation_residual")->pass) {
        report.add(check_operator_decrease(profile, op, residual_tolerance));
    }
    return report;
}

}  // namespace kink
