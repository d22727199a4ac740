#pragma once

#include <stdexcept>
#include <string>

namespace gca {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed user input: bad dimensions, bad matrices, nonpositive
// evaluation points, unparsable expressions.
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

// Two independent computations of the same quantity disagree, or a
// theorem-backed assertion failed (sign coherence, duality, exact
// division in the F-polynomial recursion).
struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& msg) : Error(msg) {}
};

// Requested quadrature tolerance could not be reached.
struct ToleranceError : Error {
    explicit ToleranceError(const std::string& msg) : Error(msg) {}
};

} // namespace gca
