#ifndef HSSEQ_ERRORS_HPP
#define HSSEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hsseq {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two values from different ground fields were combined.
class FieldMismatchError : public Error {
public:
  using Error::Error;
};

/// Shape mismatch in a matrix or subspace operation.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A quotient-map precondition failed. The message names the inclusion
/// that does not hold; this is the primary internal-consistency tripwire.
class QuotientPreconditionError : public Error {
public:
  using Error::Error;
};

/// Input data violated an algebraic axiom (antisymmetry, Jacobi,
/// representation identity, ...). Carries the human-readable report.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A structural identity that must hold for valid inputs failed.
/// Indicates a bug in the engine, never a legitimate input state.
class InternalInvariantError : public Error {
public:
  using Error::Error;
};

/// Malformed input document (syntax or schema).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Requested computation is not available for the given input family.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

} // namespace hsseq

#endif
