#pragma once

#include <stdexcept>
#include <string>

namespace ncosc {

// Bad user-supplied configuration. Maps to CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Any numerical failure during a computation. Maps to CLI exit code 2.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public NumericalError {
 public:
  explicit DomainError(const std::string& msg) : NumericalError(msg) {}
};

// Parameter set violating an algebraic constraint of a closed-form family.
class ConstraintError : public NumericalError {
 public:
  explicit ConstraintError(const std::string& msg) : NumericalError(msg) {}
};

// Integration ran into sigma -> 0 or a sign change of a(t).
class SingularityError : public NumericalError {
 public:
  SingularityError(const std::string& msg, double t)
      : NumericalError(msg), time_reached(t) {}
  double time_reached;
};

// Wronskian of a fundamental pair (numerically) vanished.
class DegeneracyError : public NumericalError {
 public:
  explicit DegeneracyError(const std::string& msg) : NumericalError(msg) {}
};

// Quadrature failed to reach the requested accuracy.
class QuadratureError : public NumericalError {
 public:
  QuadratureError(const std::string& msg, double achieved)
      : NumericalError(msg), error_estimate(achieved) {}
  double error_estimate;
};

}  // namespace ncosc
