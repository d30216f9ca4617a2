#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

/// Bad arguments or malformed input. Maps to CLI exit code 1.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an algorithm does not hold for the instance
/// (density too low, VC dimension too large, parameters infeasible).
class PreconditionFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant was found violated on a produced object.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace blowup
