#pragma once

#include <stdexcept>
#include <string>

namespace spindiscord {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested configuration is not supported (odd ring, too small, too large).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Δ ≤ −1: the ground state leaves the Sz=0 sector and the solver refuses.
class FerromagneticRegimeError : public DomainError {
 public:
  explicit FerromagneticRegimeError(double delta);
  double delta() const noexcept { return delta_; }

 private:
  double delta_;
};

/// Numerical failure of an iterative solver.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace spindiscord
