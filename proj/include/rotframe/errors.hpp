#pragma once

#include <stdexcept>
#include <string>

namespace rotframe {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the chart or parameter domain (rho <= 0, c <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// GAL congruence evaluated at or beyond rho * omega = c.
class LightCylinderError : public DomainError {
 public:
  explicit LightCylinderError(const std::string& what)
      : DomainError("light cylinder: " + what) {}
};

/// A quantity that needs motion (revolution period) was requested at omega = 0.
class DegenerateError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Index operation applied to a vector that already has the target variance.
class VarianceError : public Error {
 public:
  using Error::Error;
};

/// Spacetime index outside 0..3.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Spin constraint S.u = 0 lost during transport; the step count is too low.
class ConstraintDriftError : public Error {
 public:
  using Error::Error;
};

}  // namespace rotframe
