#include "kink/kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "kink/errors.hpp"

namespace kink {

namespace {

double flush_subnormal(double v)
{
    return v < std::numeric_limits<double>::min() ? 0.0 : v;
}

}  // namespace

void require_nonlocality(double a)
{
    if (!(a > 0.0 && a <= 1.0)) {
        throw DomainError("nonlocality parameter a must lie in (0, 1], got " + std::to_string(a));
    }
}

double kernel_full(double a, double t, double tau)
{
    require_nonlocality(a);
    const double d = t - tau;
    const double norm = 1.0 / std::sqrt(4.0 * std::numbers::pi * a);
    return flush_subnormal(norm * std::exp(-d * d / (4.0 * a)));
}

double kernel_half(double a, double t, double tau)
{
    require_nonlocality(a);
    if (t < 0.0 || tau < 0.0) {
        throw DomainError("kernel_half: t and tau must be nonnegative");
    }
    // e^{-(t-tau)^2/4a} - e^{-(t+tau)^2/4a} = e^{-(t-tau)^2/4a} (1 - e^{-t tau / a})
    const double d = t - tau;
    const double norm = 1.0 / std::sqrt(4.0 * std::numbers::pi * a);
    const double near = std::exp(-d * d / (4.0 * a));
    return flush_subnormal(norm * near * -std::expm1(-t * tau / a));
}

}  // namespace kink
