#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "subres/forcing.hpp"
#include "subres/modal.hpp"

namespace subres {

struct IntegratorConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double max_step = 0.5;
  /// Emit grid samples from the continuous extension; otherwise steps land on grid times.
  bool dense_output = true;
  std::size_t max_steps = 10'000'000;

  void validate() const;
};

struct IntegratorStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t rhs_evaluations = 0;
};

/// State (u, u').
using OscillatorState = std::array<double, 2>;

/// Integrates u'' + u = force(t) from grid.front() with the given initial
/// state using the Dormand-Prince 5(4) pair. IntegrationError on step-size
/// underflow, with the failing time.
std::vector<Sample> integrate_oscillator(const std::function<double(double)>& force,
                                         OscillatorState initial,
                                         std::span<const double> grid,
                                         const IntegratorConfig& config,
                                         IntegratorStats* stats = nullptr);

/// Zero-data Cauchy problem with the truncated forcing. Grid must start at 0.
SolutionSeries integrate_ivp(const ForcingParams& params, const Truncation& trunc,
                             std::span<const double> grid, const IntegratorConfig& config,
                             IntegratorStats* stats = nullptr);

/// max over interior samples of |(u[i+1] - 2u[i] + u[i-1])/h^2 + u[i] - f_N(t[i])|.
/// DomainError for fewer than 5 samples or a non-uniform grid.
double residual_check(const SolutionSeries& series, const ForcingParams& params,
                      const Truncation& trunc);

/// Same, against an arbitrary forcing.
double residual_check(std::span<const Sample> samples, const std::function<double(double)>& force);

}  // namespace subres
