#pragma once

#include <stdexcept>
#include <string>

namespace symwalk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition (degree mismatch, bad
/// partition, malformed text, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation would exceed a configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A search ran out of its work budget (word enumeration, products).
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A distribution that must be constant on conjugacy classes is not.
class NotClassInvariant : public Error {
 public:
  using Error::Error;
};

/// A Monte Carlo plan cannot meet its accuracy target.
class PlanInfeasible : public Error {
 public:
  PlanInfeasible(const std::string& what, long required_steps = -1)
      : Error(what), required_steps_(required_steps) {}

  /// Smallest walk length that would make the plan feasible, or -1 when no
  /// computable route exists.
  long required_steps() const { return required_steps_; }

 private:
  long required_steps_;
};

}  // namespace symwalk
