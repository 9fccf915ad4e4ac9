#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwa {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Inverting zero, evaluating at lambda = 0, substituting gamma = 0.
struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

// Exact division requested but the remainder is nonzero.
struct NotDivisibleError : Error {
    explicit NotDivisibleError(const std::string& msg) : Error(msg) {}
};

// Operands live over different variable lists.
struct VariableMismatchError : Error {
    explicit VariableMismatchError(const std::string& msg) : Error(msg) {}
};

// Exponent arithmetic left the machine-integer range. Desk-scale inputs
// never get here, so this is a bug signal rather than a recoverable state.
struct OverflowError : Error {
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// A precondition on an argument failed (zero polynomial, invertible a(h), ...).
struct InvalidArgumentError : Error {
    explicit InvalidArgumentError(const std::string& msg) : Error(msg) {}
};

// Syntax error in the expression language; `position` is a 0-based byte offset.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

}  // namespace gwa
