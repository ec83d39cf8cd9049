#pragma once

#include <stdexcept>
#include <string>

namespace boxflow {

/// A computation produced a non-finite or otherwise unusable value.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The adaptive integrator could not meet its tolerance (step underflow).
class StiffIntegrationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// An iterative routine stopped before reaching the requested tolerance;
/// carries the tolerance it did achieve.
class AccuracyError : public NumericalError {
 public:
  AccuracyError(const std::string& what, double achieved)
      : NumericalError(what), achieved_tolerance(achieved) {}
  double achieved_tolerance;
};

/// A linear solve failed (singular or badly conditioned system).
class SolverError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace boxflow
