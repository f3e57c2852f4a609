#pragma once

#include <stdexcept>
#include <string>

namespace kron {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Partition/shape preconditions violated (lengths, monotonicity, ...).
struct ShapeError : Error {
    using Error::Error;
};

// Two indices that must have equal weight do not.
struct WeightMismatch : Error {
    using Error::Error;
};

// A computation exceeded the oracle's configured size limit.
struct OracleOverflow : Error {
    using Error::Error;
};

// Integer or rational arithmetic would overflow its fixed-width storage.
struct ArithmeticOverflow : Error {
    using Error::Error;
};

// Numeric parameters outside their documented domain.
struct ParameterError : Error {
    using Error::Error;
};

// An interval [lo, hi] with lo > hi where a nonempty range is required.
struct EmptyRange : Error {
    using Error::Error;
};

// Not enough sample points to fit and validate a quasipolynomial.
struct InsufficientSamples : Error {
    using Error::Error;
};

// A fitted quasipolynomial disagrees with a validation sample; the
// requested period or degree is too small.
struct FitMismatch : Error {
    using Error::Error;
};

// Quasipolynomial does not have the two-branch shared-coefficient form.
struct ShapeDecompositionError : Error {
    using Error::Error;
};

// Malformed partition text or command-line input.
struct ParseError : Error {
    using Error::Error;
};

// Two computation routes that must agree returned different values.
struct VerifyMismatch : Error {
    using Error::Error;
};

} // namespace kron
