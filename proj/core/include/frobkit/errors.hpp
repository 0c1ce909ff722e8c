#pragma once

#include <stdexcept>
#include <string>

namespace frobkit {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs violate a documented precondition (field mismatch, non-Eisenstein
// polynomial, incompatible lifts, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The tracked precision is not enough to decide the answer. Callers may retry
// with more p-adic digits or a larger u-adic cap.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// A perfected-series root or exponent budget ran out.
class BudgetError : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

// An identity that a theorem guarantees failed at available precision.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace frobkit
