#pragma once

#include <stdexcept>
#include <string>

namespace heunref {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain where a kernel is defined (e.g. |x| beyond the
/// series disk, z >= 1 for 2F1, x at a singular point).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parameter tuple violates a constraint (gamma a nonpositive integer, a
/// constraint of a catalog entry, a degenerate exponent).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Negative base raised to a non-integer power under the strict convention.
class BranchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A verification interval contains a singularity or is too short.
class IntervalError : public Error {
 public:
  using Error::Error;
};

/// An iteration failed to meet its stopping rule. Carries the best estimate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double partial, double error_estimate)
      : Error(what), partial_(partial), error_estimate_(error_estimate) {}
  double partial() const noexcept { return partial_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double partial_;
  double error_estimate_;
};

/// The ODE oracle could not carry a solution along the requested path.
class PropagationError : public Error {
 public:
  using Error::Error;
};

/// Every parameter draw of a sample plan was rejected.
class EmptyPlanError : public Error {
 public:
  using Error::Error;
};

/// Bad run configuration (CLI flags, config file, plan fields).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace heunref
