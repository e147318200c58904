#pragma once

namespace kink {

// Error function and its complement. Absolute error below 1e-12 on all
// finite arguments; non-finite input throws DomainError.
double erf(double x);
double erfc(double x);

}  // namespace kink
