#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "kink/grid.hpp"
#include "kink/operator.hpp"

namespace kink {

/// Parameters of one run of the monotone iteration.
struct SolverConfig {
    double a = 1.0;
    double t_max = 20.0;
    std::size_t n_points = 401;
    std::size_t max_iterations = 200;
    double step_tolerance = 1e-9;
    double residual_tolerance = 1e-8;
    double tail_value = 1.0;
    std::vector<std::size_t> record_iterates = {0, 1, 2, 3, 4, 50, 150};
    // When false the loop always runs max_iterations steps; the converged
    // flag is still evaluated on the final step.
    bool stop_on_convergence = true;

    /// Throws DomainError describing the first violated constraint.
    void validate() const;
    Grid grid() const { return Grid(t_max, n_points); }
};

/// Diagnostics of the step phi_n -> phi_{n+1}.
struct IterationRecord {
    double sup_step;                 // max_k |phi_{n+1} - phi_n|
    double residual;                 // max_k |a phi^3 + (1-a) phi - K phi| at phi_{n+1}
    double min_monotonicity_margin;  // min_k (phi_{n+1} - phi_n)
    double max_value;                // max_k phi_{n+1}
    double min_slope;                // min_k (phi_{n+1}[k+1] - phi_{n+1}[k])
};

struct IterationReport {
    std::size_t iterations_run = 0;
    std::vector<IterationRecord> records;
    bool converged = false;
    std::map<std::size_t, HalfLineFunction> snapshots;

    /// Median of step_{n+1} / step_n over steps still above rounding
    /// level; empty when fewer than two such steps exist.
    std::optional<double> observed_contraction() const;
};

struct SolutionProfile {
    double a;
    HalfLineFunction half_line;
    FullLineFunction full_line;
    IterationReport report;
};

/// phi_0(t) = (1 - exp(-(a t)^2)) / 2.
HalfLineFunction initial_iterate(double a, const Grid& grid);

/// Pointwise cubic inversion of an operator output. Slightly negative
/// inputs (quadrature noise near t = 0) are clamped to zero first.
HalfLineFunction invert_operator_output(double a, const HalfLineFunction& rhs);

/// One step: solve a phi_{n+1}^3 + (1 - a) phi_{n+1} = K_a phi_n nodewise.
HalfLineFunction iterate_once(const HalfLineOperator& op, const HalfLineFunction& phi);

/// Runs the iteration from initial_iterate. Non-convergence within
/// max_iterations is reported through report.converged, not thrown.
SolutionProfile solve(const SolverConfig& config);

/// Phi(t) = phi(t) for t >= 0 and -phi(-t) for t < 0. The origin value is
/// forced to 0 if |phi(0)| <= 1e-12; otherwise throws AsymmetryError.
FullLineFunction odd_extend(const HalfLineFunction& phi);

/// The t >= 0 half of a full-line function.
HalfLineFunction restrict_to_half_line(const FullLineFunction& f);

}  // namespace kink
