#include "kink/iteration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kink/cubic.hpp"
#include "kink/errors.hpp"
#include "kink/kernel.hpp"

namespace kink {

void SolverConfig::validate() const
{
    require_nonlocality(a);
    static_cast<void>(Grid(t_max, n_points));
    if (!(step_tolerance > 0.0) || !(residual_tolerance > 0.0)) {
        throw DomainError("solver: tolerances must be positive");
    }
    if (!std::isfinite(tail_value)) {
        throw DomainError("solver: tail value must be finite");
    }
    for (std::size_t k : record_iterates) {
        if (k > max_iterations) {
            throw DomainError("solver: snapshot index " + std::to_string(k) +
                              " exceeds max_iterations " + std::to_string(max_iterations));
        }
    }
}

std::optional<double> IterationReport::observed_contraction() const
{
    std::vector<double> ratios;
    for (std::size_t n = 1; n < records.size(); ++n) {
        const double prev = records[n - 1].sup_step;
        const double curr = records[n].sup_step;
        if (prev > 1e-13 && curr > 1e-13) {
            ratios.push_back(curr / prev);
        }
    }
    if (ratios.size() < 2) {
        return std::nullopt;
    }
    std::sort(ratios.begin(), ratios.end());
    const std::size_t mid = ratios.size() / 2;
    return ratios.size() % 2 ? ratios[mid] : 0.5 * (ratios[mid - 1] + ratios[mid]);
}

HalfLineFunction initial_iterate(double a, const Grid& grid)
{
    require_nonlocality(a);
    return HalfLineFunction::sample(grid, [a](double t) {
        const double at = a * t;
        return -0.5 * std::expm1(-at * at);
    });
}

HalfLineFunction invert_operator_output(double a, const HalfLineFunction& rhs)
{
    std::vector<double> out(rhs.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = invert_cubic({a, std::max(rhs[k], 0.0)});
    }
    return HalfLineFunction(rhs.grid(), std::move(out));
}

HalfLineFunction iterate_once(const HalfLineOperator& op, const HalfLineFunction& phi)
{
    return invert_operator_output(op.a(), op.apply(phi));
}

namespace {

IterationRecord describe_step(double a, const HalfLineFunction& prev, const HalfLineFunction& next,
                              const HalfLineFunction& image)
{
    IterationRecord r{0.0, 0.0, std::numeric_limits<double>::infinity(),
                      -std::numeric_limits<double>::infinity(),
                      std::numeric_limits<double>::infinity()};
    for (std::size_t k = 0; k < next.size(); ++k) {
        const double d = next[k] - prev[k];
        r.sup_step = std::max(r.sup_step, std::abs(d));
        r.min_monotonicity_margin = std::min(r.min_monotonicity_margin, d);
        r.max_value = std::max(r.max_value, next[k]);
        r.residual = std::max(r.residual, std::abs(cubic_map(a, next[k]) - image[k]));
        if (k + 1 < next.size()) {
            r.min_slope = std::min(r.min_slope, next[k + 1] - next[k]);
        }
    }
    return r;
}

}  // namespace

SolutionProfile solve(const SolverConfig& config)
{
    config.validate();
    const Grid grid = config.grid();
    const HalfLineOperator op = build_half_line_operator(config.a, grid, config.tail_value);

    IterationReport report;
    HalfLineFunction current = initial_iterate(config.a, grid);
    HalfLineFunction image = op.apply(current);

    auto wants_snapshot = [&](std::size_t n) {
        return std::find(config.record_iterates.begin(), config.record_iterates.end(), n) !=
               config.record_iterates.end();
    };
    if (wants_snapshot(0)) {
        report.snapshots.emplace(0, current);
    }

    for (std::size_t n = 0; n < config.max_iterations; ++n) {
        HalfLineFunction next = invert_operator_output(config.a, image);
        HalfLineFunction next_image = op.apply(next);
        const IterationRecord rec = describe_step(config.a, current, next, next_image);
        report.records.push_back(rec);
        report.iterations_run = n + 1;
        current = std::move(next);
        image = std::move(next_image);
        if (wants_snapshot(n + 1)) {
            report.snapshots.emplace(n + 1, current);
        }

        report.converged =
            rec.sup_step <= config.step_tolerance || rec.residual <= config.residual_tolerance;
        if (report.converged && config.stop_on_convergence) {
            break;
        }
    }

    FullLineFunction full = odd_extend(current);
    return SolutionProfile{config.a, std::move(current), std::move(full), std::move(report)};
}

FullLineFunction odd_extend(const HalfLineFunction& phi)
{
    if (std::abs(phi[0]) > 1e-12) {
        throw AsymmetryError("odd extension needs phi(0) = 0, got " + std::to_string(phi[0]));
    }
    const SymmetricGrid grid(phi.grid());
    const std::size_t m = grid.origin();
    std::vector<double> v(grid.size());
    v[m] = 0.0;
    for (std::size_t k = 1; k < phi.size(); ++k) {
        v[m + k] = phi[k];
        v[m - k] = -phi[k];
    }
    return FullLineFunction(grid, std::move(v));
}

HalfLineFunction restrict_to_half_line(const FullLineFunction& f)
{
    const std::size_t m = f.grid().origin();
    const auto v = f.values();
    return HalfLineFunction(f.grid().half(), std::vector<double>(v.begin() + static_cast<std::ptrdiff_t>(m), v.end()));
}

}  // namespace kink
