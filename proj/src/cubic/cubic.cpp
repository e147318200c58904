#include "kink/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kink/errors.hpp"
#include "kink/kernel.hpp"

namespace kink {

namespace {

void validate(const CubicParams& p)
{
    require_nonlocality(p.a);
    if (!std::isfinite(p.rhs)) {
        throw DomainError("cubic: right-hand side must be finite");
    }
}

}  // namespace

double cubic_map(double a, double phi)
{
    return a * phi * phi * phi + (1.0 - a) * phi;
}

double cubic_residual(const CubicParams& p, double phi)
{
    return cubic_map(p.a, phi) - p.rhs;
}

double cubic_residual_tolerance(double rhs)
{
    return 1e-10 * std::max(1.0, std::abs(rhs));
}

double solve_closed_form(const CubicParams& p)
{
    validate(p);
    const double a = p.a;
    if (a == 1.0) {
        return std::cbrt(p.rhs);
    }
    if (p.rhs == 0.0) {
        return 0.0;
    }

    const double b = std::abs(p.rhs);
    const double c = 1.0 - a;
    const double radicand = 108.0 * c * c * c * a * a * a + 729.0 * a * a * a * a * b * b;
    const double v = std::cbrt(2.0 / (27.0 * a * a * b + std::sqrt(radicand)));
    if (!(std::isfinite(v) && v > 0.0)) {
        throw NumericError("cubic closed form: degenerate intermediate v");
    }
    const double root = -v * c + 1.0 / (3.0 * a * v);
    if (!std::isfinite(root)) {
        throw NumericError("cubic closed form: non-finite root");
    }
    return std::copysign(root, p.rhs);
}

double solve_robust(const CubicParams& p, double tol)
{
    validate(p);
    if (!(tol > 0.0)) {
        throw DomainError("cubic: tolerance must be positive");
    }

    // g is strictly increasing and g(+-(1 + |rhs|)) straddle zero.
    double lo = -(1.0 + std::abs(p.rhs));
    double hi = 1.0 + std::abs(p.rhs);
    double x = std::clamp(std::cbrt(p.rhs / p.a), lo, hi);
    constexpr double eps = std::numeric_limits<double>::epsilon();

    for (int iter = 0; iter < 300; ++iter) {
        const double g = cubic_residual(p, x);
        if (g == 0.0) {
            return x;
        }
        if (g < 0.0) {
            lo = x;
        } else {
            hi = x;
        }

        const double slope = 3.0 * p.a * x * x + (1.0 - p.a);
        double next = slope > 0.0 ? x - g / slope : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }

        const double scale = std::max(1.0, std::abs(x));
        if (std::abs(g) <= tol && std::abs(next - x) <= 4.0 * eps * scale) {
            return next;
        }
        if (hi - lo <= 2.0 * eps * scale) {
            return std::abs(cubic_residual(p, lo)) < std::abs(cubic_residual(p, hi)) ? lo : hi;
        }
        x = next;
    }
    return x;
}

double invert_cubic(const CubicParams& p)
{
    try {
        const double root = solve_closed_form(p);
        if (std::abs(cubic_residual(p, root)) <= cubic_residual_tolerance(p.rhs)) {
            return root;
        }
    } catch (const NumericError&) {
    }
    return solve_robust(p);
}

}  // namespace kink
