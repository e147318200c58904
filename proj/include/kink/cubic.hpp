#pragma once

namespace kink {

/// One pointwise instance of a*phi^3 + (1 - a)*phi = rhs.
struct CubicParams {
    double a;
    double rhs;
};

/// The left-hand side a*phi^3 + (1 - a)*phi.
double cubic_map(double a, double phi);

/// Residual a*phi^3 + (1 - a)*phi - rhs.
double cubic_residual(const CubicParams& p, double phi);

/// Residual bound every returned root must meet: 1e-10 * max(1, |rhs|).
double cubic_residual_tolerance(double rhs);

/// Real root from Cardano's formula in the form
///
///     phi = -v (1 - a) + 1 / (3 a v),
///     v   = (2 / (27 a^2 B + sqrt(108 (1-a)^3 a^3 + 729 a^4 B^2)))^(1/3).
///
/// Evaluated on |rhs| and sign-restored (the equation is odd), and as
/// cbrt(rhs) when a == 1. Throws NumericError if v is zero or not finite,
/// DomainError on invalid a or non-finite rhs.
double solve_closed_form(const CubicParams& p);

/// Bracketed Newton iteration on [-(1 + |rhs|), 1 + |rhs|] with bisection
/// fallback. Runs until |residual| <= tol and the Newton correction is at
/// rounding level, or the bracket can no longer shrink.
double solve_robust(const CubicParams& p, double tol = 1e-14);

/// Closed form, falling back to solve_robust when the closed form throws
/// or misses cubic_residual_tolerance.
double invert_cubic(const CubicParams& p);

}  // namespace kink
