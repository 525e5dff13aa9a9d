#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "subres/forcing.hpp"

namespace subres {

enum class Method { closed_form, integrator, asymptotic };

std::string_view to_string(Method method);

/// Grid loops run either through the serial reference driver or the OpenMP
/// driver; both call the same point kernel and give bit-identical results.
enum class Execution { serial, parallel };

struct Sample {
  double t = 0.0;
  double u = 0.0;
  double du = 0.0;
};

/// Sampled trajectory of u'' + u = f_N(t), u(0) = u'(0) = 0.
struct SolutionSeries {
  std::vector<Sample> samples;
  Method method = Method::closed_form;
  ForcingParams params;
  Truncation trunc;
};

/// The solution written as u = S sin t + C cos t, with S and C split into a
/// bounded remainder part and the R3/R4 growth series:
///   S = S_rem + R3/2,  C = C_rem + R4/2,  sin t S_rem + cos t C_rem = 0.
/// sigma_s = sum n^(p-k) sin(t/n^p), sigma_c = sum n^(p-k) sin^2(t/(2 n^p)).
struct SeriesDecomposition {
  double t = 0.0;
  double S = 0.0;
  double C = 0.0;
  double S_rem = 0.0;
  double C_rem = 0.0;
  double R3 = 0.0;
  double R4 = 0.0;
  double sigma_s = 0.0;
  double sigma_c = 0.0;
  std::size_t n_terms_used = 0;
};

/// Exact solution of u'' + u = n^-k cos(omega_n t) with zero initial data:
///   u_n = n^(2p-k) (cos(omega_n t) - cos t) / (2 n^p - 1).
/// Evaluated as A_n (sin t sin th - 2 cos t sin^2(th/2)), th = t/n^p, which
/// keeps full accuracy for large t.
double mode_solution(const ForcingParams& params, std::size_t n, double t);
double mode_velocity(const ForcingParams& params, std::size_t n, double t);

/// Modal superposition over `grid`, with analytic velocity.
SolutionSeries superposed_solution(const ForcingParams& params, const Truncation& trunc,
                                   std::span<const double> grid,
                                   Execution exec = Execution::parallel);

SeriesDecomposition decompose_series(const ForcingParams& params, const Truncation& trunc,
                                     double t);

std::vector<SeriesDecomposition> decompose_grid(const ForcingParams& params,
                                                const Truncation& trunc,
                                                std::span<const double> grid,
                                                Execution exec = Execution::parallel);

/// |sigma_s| <= zeta(k) sinh(t): the Maclaurin majorant with C = zeta(k).
bool sigma_bound_check(const ForcingParams& params, double t, double sigma_s_value);

struct SigmaSums {
  double sigma_s = 0.0;
  double sigma_c = 0.0;
};

/// sigma_s, sigma_c of the untruncated series: direct summation of the first
/// terms plus the integral of the tail (expanded in t/N^p) and Euler-Maclaurin
/// endpoint corrections. Uses at least `min_direct` terms and enough that
/// t/N^p <= 1/4.
SigmaSums sigma_sums_converged(const ForcingParams& params, double t,
                               std::size_t min_direct = 20000);

}  // namespace subres
