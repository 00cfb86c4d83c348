#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracol {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (|x| > 1 on Λ,
/// evaluation point outside [0,T], ln of a non-positive number, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid model parameter (Jacobi exponent ≤ −1, α outside its range, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

class SizeMismatchError : public Error {
public:
    using Error::Error;
};

/// Γ evaluated at a non-positive integer.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Base for failures of the numerics themselves rather than of the input.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// An iteration (eigen-solver, Newton, adaptive oracle) did not converge.
class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularMatrixError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A field evaluation produced inf or NaN.
class NumericalOverflowError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class UnknownIdError : public Error {
public:
    using Error::Error;
};

/// Expression syntax error; carries the byte offset and the tokens that
/// would have been accepted there.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset, std::vector<std::string> expected)
        : Error(message), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

class UnknownIdentifierError : public ParseError {
public:
    using ParseError::ParseError;
};

} // namespace fracol
