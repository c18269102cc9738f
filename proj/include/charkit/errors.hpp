#pragma once

#include <stdexcept>
#include <string>

namespace charkit {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (non-prime modulus,
// zero direction, out-of-range Galois index, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Enumeration or allocation would exceed a configured limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data (schema errors, bad sinograms,
// ambient mismatches, unmet hypotheses).
class DataError : public Error {
 public:
  using Error::Error;
};

// A checked theorem was falsified, or an internal invariant failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace charkit
