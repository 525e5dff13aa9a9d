#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subres {

/// Invalid argument outside a function's mathematical domain (k <= 1, s <= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Base class for failures of a numerical procedure on valid input.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The forcing tail bound for the requested term count exceeds the tolerance.
class InsufficientTruncation : public NumericalError {
 public:
  InsufficientTruncation(std::size_t requested, std::size_t required, double bound, double tol);
  std::size_t required_terms() const noexcept { return required_; }

 private:
  std::size_t required_;
};

/// A series or iteration hit its term cap before reaching tolerance.
class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Parameters lie outside the subresonant regime 0 < (k-1)/p < 1.
class UnsupportedRegime : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Step-size underflow (or step budget exhaustion) in the IVP integrator.
class IntegrationError : public NumericalError {
 public:
  IntegrationError(const std::string& what, double t);
  double time() const noexcept { return t_; }

 private:
  double t_;
};

/// Too few usable windows for the envelope power-law fit.
class FitError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace subres
