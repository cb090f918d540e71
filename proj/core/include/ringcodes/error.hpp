#pragma once

#include <stdexcept>
#include <string>

namespace ringcodes {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands or matrices that live over different ambient rings.
class IncompatibleRings : public Error {
 public:
  using Error::Error;
};

/// Inverse requested for an element of positive valuation.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Malformed arguments: bad ring parameters, index sets, lengths.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive loop would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal postcondition failed (G*H^T != 0, wrong dual type, ...).
/// Seeing one of these means a bug, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Inputs that cannot come from any linear code: non-integral MacWilliams
/// coefficients, negative solver output, d > n - K + 1.
class InconsistentInputs : public Error {
 public:
  using Error::Error;
};

/// Too few known weights for the linear system to have a unique solution.
class Underdetermined : public Error {
 public:
  using Error::Error;
};

/// JSON or text input that does not follow the documented formats.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ringcodes
