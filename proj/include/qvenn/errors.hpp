#pragma once

#include <stdexcept>
#include <string>

namespace qvenn {

// Every error raised by the library derives from Error. The CLI maps all of
// them to exit status 2 (validation failure).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Duplicate or malformed subsystem labels.
class LayoutError : public Error {
 public:
  using Error::Error;
};

// A label or index that does not exist in a layout.
class AddressingError : public Error {
 public:
  using Error::Error;
};

// Density matrix or state vector violating its invariants.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

// Kraus set or isometry that is not trace preserving.
class InvalidChannelError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Scalar argument outside its admissible range (probabilities, caps).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An entropic identity that must hold did not, within tolerance.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace qvenn
