#pragma once

#include <cstddef>
#include <numbers>

#include "subres/forcing.hpp"

namespace subres {

struct ToleranceConfig {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  /// Boundary between the near-zero series and quadrature for the singular integrals.
  double split_point = 0.1;
  std::size_t max_series_terms = 200;

  /// Throws DomainError on non-positive tolerances or split_point outside (0, pi/2].
  void validate() const;
};

/// Riemann zeta for real s > 1 (DomainError otherwise).
double zeta(double s);

/// sigma_s(t) = sum_j (-1)^(j-1) t^(2j-1)/(2j-1)! zeta(2(j-1)p + k).
/// Stops once a term falls below tol.abs_tol; ConvergenceError after
/// tol.max_series_terms terms. Cancellation limits this to moderate |t|.
double sigma_s_maclaurin(const ForcingParams& params, double t, const ToleranceConfig& tol);

/// sigma_c(t) = sum_j (-1)^(j-1) t^(2j)/(2 (2j)!) zeta((2j-1)p + k).
double sigma_c_maclaurin(const ForcingParams& params, double t, const ToleranceConfig& tol);

struct SingularIntegral {
  double value = 0.0;
  double error_estimate = 0.0;
  /// alpha >= 1: the integral converges but lies outside the growth regime.
  bool outside_growth_regime = false;
};

/// int_0^upper tau^(alpha-2) sin(tau) dtau, split at tol.split_point into a
/// termwise-integrated Taylor series and adaptive quadrature.
/// DomainError for alpha <= 0 (divergent at 0).
SingularIntegral singular_integral_sine(double alpha, const ToleranceConfig& tol,
                                        double upper = std::numbers::pi / 2);

/// int_0^upper tau^(alpha-2) sin^2(tau/2) dtau, same split strategy.
SingularIntegral singular_integral_sine_squared(double alpha, const ToleranceConfig& tol,
                                                double upper = std::numbers::pi);

/// Termwise series over the whole interval, no quadrature. Convergent for any
/// finite upper limit; used as the independent second route.
double termwise_integral_sine(double alpha, double upper = std::numbers::pi / 2);
double termwise_integral_sine_squared(double alpha, double upper = std::numbers::pi);

/// Si(x) = int_0^x sin(t)/t dt by its Taylor series.
double sine_integral(double x);

}  // namespace subres
