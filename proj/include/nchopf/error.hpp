#pragma once

#include <stdexcept>
#include <string>

namespace nchopf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (CLI exit code 1).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ConductorMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A configured size bound was exceeded (CLI exit code 2).
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A verification suite or consistency check failed (CLI exit code 3).
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace nchopf
