#pragma once

#include <stdexcept>
#include <string>

namespace twomode {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Base for failures raised while integrating; carries the simulation time.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double t)
      : std::runtime_error(what + " (t=" + std::to_string(t) + ")"), t_(t) {}
  double time() const noexcept { return t_; }

 private:
  double t_;
};

class DivergenceError : public SolverError {
 public:
  using SolverError::SolverError;
};

class StepSizeError : public SolverError {
 public:
  using SolverError::SolverError;
};

class IntegratorError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace twomode
