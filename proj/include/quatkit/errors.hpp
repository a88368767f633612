#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quatkit {

/// Base class for all quatkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic between ExactRational and Float64 values is never coerced.
class ModeMismatchError : public Error {
public:
    explicit ModeMismatchError(const std::string& what) : Error(what) {}
};

class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

/// Operation leaves the scalar mode's closure (e.g. square root of a rational).
class UnsupportedOperationError : public Error {
public:
    explicit UnsupportedOperationError(const std::string& what) : Error(what) {}
};

class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

/// A numeric evaluation produced a non-finite value.
class NumericDomainError : public Error {
public:
    explicit NumericDomainError(const std::string& what) : Error(what) {}
};

/// A structure table violates the identity axiom or is malformed.
class InvalidTableError : public Error {
public:
    explicit InvalidTableError(const std::string& what) : Error(what) {}
};

/// Multi-index exponent grew past the per-variable cap during expansion.
class ExponentOverflowError : public Error {
public:
    explicit ExponentOverflowError(const std::string& what) : Error(what) {}
};

/// Lexical or syntax error with a 1-based character position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace quatkit
