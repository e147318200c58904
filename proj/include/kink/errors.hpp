#pragma once

#include <stdexcept>

namespace kink {

/// A parameter lies outside the domain an operation is defined on
/// (a not in (0,1], negative time, malformed grid, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two grid-bound objects were combined although they live on different grids.
class GridMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A closed-form evaluation produced a zero or non-finite intermediate.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A half-line profile cannot be extended oddly because it does not vanish at t = 0.
class AsymmetryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The hypothesis of a property check does not hold for the given input.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace kink
