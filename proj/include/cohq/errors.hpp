#pragma once

#include <stdexcept>
#include <string>

namespace cohq {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

class NotPsdError : public Error {
 public:
  using Error::Error;
};

// A state failed one of its validity checks (normalization, trace, ...).
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

// Input is valid but outside the family an operation is defined on.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two computation routes disagree beyond what rounding explains.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cohq
