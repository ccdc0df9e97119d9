#pragma once

#include <stdexcept>
#include <string>

namespace tra {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (x < 1, r <= 0, n > N, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a pole of Gamma, a Pochhammer denominator or a vanishing divisor.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A parameter constraint (basis regime, reality condition, radicand sign) is violated.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed (no convergence, unrecoverable overflow).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tra
