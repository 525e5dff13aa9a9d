#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "subres/forcing.hpp"
#include "subres/special.hpp"

namespace subres {

/// N: summands n^(p-k) sin(t/n^p) have phase >= pi/2 exactly for n <= N.
/// M: split index of sigma_c, phase t/n^p >= pi for n <= M.
struct OscillationCutoffs {
  std::size_t N = 0;
  std::size_t M = 0;
  double t = 0.0;
};

OscillationCutoffs oscillation_cutoffs(const ForcingParams& params, double t);

/// Constants of the envelope law u ~ (C_s sin t + C_c cos t) t^(1-alpha)
///                                  = (1/p) A_alpha t^(1-alpha) sin(t + phi_alpha).
struct EnvelopeCoefficients {
  double p = 0.0;
  double alpha = 0.0;
  double C_s = 0.0;
  double C_c = 0.0;
  double A_alpha = 0.0;
  double phi_alpha = 0.0;
};

/// UnsupportedRegime unless 0 < alpha < 1.
EnvelopeCoefficients envelope_coefficients(const ForcingParams& params,
                                           const ToleranceConfig& tol = {});

/// Amplitude-phase form (1/p) A_alpha t^(1-alpha) sin(t + phi_alpha).
double asymptotic_solution(const EnvelopeCoefficients& coeffs, double t);
/// Harmonic form (C_s sin t + C_c cos t) t^(1-alpha); equal to the above.
double asymptotic_solution_harmonic(const EnvelopeCoefficients& coeffs, double t);

struct EnvelopePrediction {
  double S_pred = 0.0;
  double C_pred = 0.0;
};

/// (C_s t^(1-alpha), C_c t^(1-alpha)).
EnvelopePrediction envelope_prediction(const EnvelopeCoefficients& coeffs, double t);

struct EnvelopeFit {
  double exponent_s = 0.0;  // log-log slope of the windowed RMS of S
  double exponent_c = 0.0;  // same for C
  double kappa_s = 0.0;     // mean S / (C_s t^(1-alpha)) over the top decade
  double kappa_c = 0.0;
  double kappa_s_drift = 0.0;  // (max - min) / |mean| of the per-window ratios
  double kappa_c_drift = 0.0;
  std::size_t windows = 0;
  std::size_t top_decade_windows = 0;
};

struct FitOptions {
  std::size_t points_per_window = 32;
  double window_width = 6.283185307179586;  // one forcing period
};

/// Coefficients of sin t and cos t at one time.
struct SinCosCoefficients {
  double S = 0.0;
  double C = 0.0;
};

/// Batch source of (S(t), C(t)) for the fit; returns one entry per time.
using CoefficientSource =
    std::function<std::vector<SinCosCoefficients>(std::span<const double> times)>;

/// Windowed-RMS power-law fit of an arbitrary coefficient source against `coeffs`.
/// Window centres are log-spaced on [t_lo, t_hi]. FitError when fewer than
/// three usable windows remain.
EnvelopeFit fit_envelope(const CoefficientSource& source, const EnvelopeCoefficients& coeffs,
                         double t_lo, double t_hi, std::size_t n_samples,
                         const FitOptions& options = {});

/// fit_envelope applied to the exact series S(t), C(t) at the given truncation.
/// Requires 0 < t_lo < t_hi and n_samples >= 8.
EnvelopeFit empirical_envelope_fit(const ForcingParams& params, const Truncation& trunc,
                                   double t_lo, double t_hi, std::size_t n_samples,
                                   const ToleranceConfig& tol = {},
                                   const FitOptions& options = {});

}  // namespace subres
