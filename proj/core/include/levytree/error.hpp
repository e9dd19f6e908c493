#pragma once

#include <stdexcept>
#include <string>

namespace levytree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parent structure is not a single-rooted tree (cycle, several roots, bad index).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Field values out of their admissible range (nonpositive edge, negative mass, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but degenerate for the request (zero mass, zero height).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class SamplingError : public Error {
 public:
  using Error::Error;
};

class CalibrationError : public Error {
 public:
  using Error::Error;
};

/// Quadrature or iteration did not reach the requested accuracy.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

}  // namespace levytree
