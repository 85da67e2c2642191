#pragma once

#include <stdexcept>
#include <string>

namespace aw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied inconsistent or malformed input.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A denominator or normalization factor vanishes exactly.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// Input lies outside the regime where a result is real or positive
/// (non-positive b_n, negative discriminant, complex bounds).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Floating point trouble: overflow, failed bracketing.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// An internal identity that must hold did not. Always a defect.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace aw
