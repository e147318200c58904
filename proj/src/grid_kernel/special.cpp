#include "kink/special.hpp"

#include <cmath>

#include "kink/errors.hpp"

namespace kink {

// glibc's erf/erfc are accurate to about one ulp, far inside the 1e-12
// contract; the series oracle in the test suite guards that assumption.

double erf(double x)
{
    if (!std::isfinite(x)) {
        throw DomainError("erf: argument must be finite");
    }
    return std::erf(x);
}

double erfc(double x)
{
    if (!std::isfinite(x)) {
        throw DomainError("erfc: argument must be finite");
    }
    return std::erfc(x);
}

}  // namespace kink
