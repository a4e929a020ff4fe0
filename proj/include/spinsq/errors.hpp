#pragma once

#include <stdexcept>
#include <string>

namespace spinsq {

// Invalid arguments: out-of-range indices, malformed grids, bad weights.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Mean spin too small to define a perpendicular plane.
class DegenerateDirectionError : public DomainError {
public:
    using DomainError::DomainError;
};

// Moments carry a transverse mean spin, so the even/odd closed form does not apply.
class NotEvenOddError : public DomainError {
public:
    using DomainError::DomainError;
};

// Reduced matrix has x± above the X-form threshold.
class NotXFormError : public DomainError {
public:
    using DomainError::DomainError;
};

// Request exceeds the dense oracle's qubit cap.
class CapacityError : public DomainError {
public:
    using DomainError::DomainError;
};

// Solver non-convergence or a violated numerical contract.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace spinsq
