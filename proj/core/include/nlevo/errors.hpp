#pragma once

#include <stdexcept>
#include <string>

namespace nlevo {

/// Base class for all nlevo failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mesh degree below the minimum supported by the discretization.
class InvalidDegreeError : public Error {
 public:
  using Error::Error;
};

/// An operator family turned out not to be strongly positive on [-1,1].
class PositivityError : public Error {
 public:
  using Error::Error;
};

/// The corner factor I + alpha * sigma_n ... sigma_1 is numerically singular.
class SingularCornerError : public Error {
 public:
  using Error::Error;
};

/// Dense elimination hit a numerically singular system.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Fixed-point iteration ran out of iterations with contraction estimate >= 1.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Fixed-point iteration ran out of iterations while still contracting.
class IterationLimitError : public Error {
 public:
  using Error::Error;
};

/// A reference oracle failed its own accuracy check.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// An operator / forcing evaluator produced non-finite values.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Two independent quadrature paths disagreed beyond tolerance.
class QuadratureMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace nlevo
