#pragma once

namespace kink {

/// Throws DomainError unless a lies in (0, 1].
void require_nonlocality(double a);

/// Heat kernel of width 2*sqrt(a) on the full line,
/// exp(-(t - tau)^2 / (4a)) / sqrt(4 pi a). Results below the smallest
/// normal double are returned as 0.
double kernel_full(double a, double t, double tau);

/// Antisymmetrized kernel for odd functions restricted to t, tau >= 0:
/// kernel_full(a, t, tau) - kernel_full(a, t, -tau). Nonnegative and zero
/// whenever t * tau == 0.
double kernel_half(double a, double t, double tau);

}  // namespace kink
