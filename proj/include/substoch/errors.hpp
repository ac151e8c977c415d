#ifndef SUBSTOCH_ERRORS_HPP
#define SUBSTOCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace substoch {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller passed values that violate a documented precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// Two values that must belong together (same space, same operator) do not.
struct ContractViolation : Error {
    using Error::Error;
};

// The operator is stochastic up to tolerance; the rank-one completion is undefined.
struct StochasticOperatorError : Error {
    using Error::Error;
};

// A series or resolvent was requested outside the spectral-radius gate.
struct SpectralRadiusError : Error {
    using Error::Error;
};

// An iteration or linear solve did not produce a usable result.
struct ConvergenceError : Error {
    using Error::Error;
};

// Intermediate quantity left the range of double.
struct OverflowError : Error {
    using Error::Error;
};

// inf over t is 0 and not attained (one of the factors vanishes).
struct InfimumNotAttained : Error {
    using Error::Error;
};

// A re-verification that must hold in exact arithmetic failed numerically.
struct InternalConsistencyError : Error {
    using Error::Error;
};

// Malformed input file; message is "<file>:<line>: <reason>".
struct ParseError : Error {
    using Error::Error;
};

}  // namespace substoch

#endif
