#pragma once

#include <stdexcept>
#include <string>

namespace gmqfrac {

// Base for every numerical or configuration failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function (z >= 1 in 2F1,
// evaluation point on or outside the unit ball for a tail integral, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a pole of the gamma function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iterative procedure (series, Newton, adaptive quadrature) did not
// reach its tolerance within the iteration budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// Invalid user input: bad parameters, malformed config, unknown preset.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Time integration left the admissible range.
class BlowUpError : public Error {
 public:
  using Error::Error;
};

}  // namespace gmqfrac
