#pragma once

#include <stdexcept>
#include <string>

namespace kn {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument did not hold (non-orthogonal matrix,
/// exponent outside the ring, unsupported N, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace kn
