#include "subres/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "subres/errors.hpp"
#include "subres/modal.hpp"

namespace subres {

namespace {

// Largest n >= 0 with n^p <= x.
std::size_t floor_root(double x, double p) {
  if (!(x >= 1.0)) return 0;
  auto n = static_cast<std::size_t>(std::floor(std::pow(x, 1.0 / p)));
  while (n > 0 && std::pow(static_cast<double>(n), p) > x) --n;
  while (std::pow(static_cast<double>(n + 1), p) <= x) ++n;
  return n;
}

}  // namespace

OscillationCutoffs oscillation_cutoffs(const ForcingParams& params, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("oscillation_cutoffs needs finite t >= 0");
  const double pi = std::numbers::pi;
  return {floor_root(2.0 * t / pi, params.p()), floor_root(t / pi, params.p()), t};
}

EnvelopeCoefficients envelope_coefficients(const ForcingParams& params,
                                           const ToleranceConfig& tol) {
  const double p = params.p();
  const double alpha = params.alpha();
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw UnsupportedRegime("envelope law needs 0 < (k-1)/p < 1");
  }
  const double sine = singular_integral_sine(alpha, tol).value;
  const double sine_sq = singular_integral_sine_squared(alpha, tol).value;

  EnvelopeCoefficients c;
  c.p = p;
  c.alpha = alpha;
  c.C_s = sine / p;
  c.C_c = -(1.0 / (2.0 * std::pow(std::numbers::pi, 1.0 - alpha) * p * (1.0 - alpha)) +
            sine_sq / p);
  c.A_alpha = p * std::hypot(c.C_s, c.C_c);
  c.phi_alpha = std::atan2(c.C_c, c.C_s);
  return c;
}

double asymptotic_solution(const EnvelopeCoefficients& coeffs, double t) {
  if (!(t >= 0.0)) throw DomainError("asymptotic_solution needs t >= 0");
  return coeffs.A_alpha / coeffs.p * std::pow(t, 1.0 - coeffs.alpha) *
         std::sin(t + coeffs.phi_alpha);
}

double asymptotic_solution_harmonic(const EnvelopeCoefficients& coeffs, double t) {
  if (!(t >= 0.0)) throw DomainError("asymptotic_solution needs t >= 0");
  return (coeffs.C_s * std::sin(t) + coeffs.C_c * std::cos(t)) * std::pow(t, 1.0 - coeffs.alpha);
}

EnvelopePrediction envelope_prediction(const EnvelopeCoefficients& coeffs, double t) {
  if (!(t > 0.0)) throw DomainError("envelope_prediction needs t > 0");
  const double growth = std::pow(t, 1.0 - coeffs.alpha);
  return {coeffs.C_s * growth, coeffs.C_c * growth};
}

namespace {

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

struct Ratio {
  double mean = 0.0;
  double drift = 0.0;
};

Ratio summarize(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return {mean, (*hi - *lo) / std::abs(mean)};
}

}  // namespace

EnvelopeFit fit_envelope(const CoefficientSource& source, const EnvelopeCoefficients& coeffs,
                         double t_lo, double t_hi, std::size_t n_samples,
                         const FitOptions& options) {
  if (!(t_lo > 0.0) || !(t_hi > t_lo)) throw DomainError("envelope fit needs 0 < t_lo < t_hi");
  if (n_samples < 8) throw DomainError("envelope fit needs n_samples >= 8");
  if (options.points_per_window < 2 || !(options.window_width > 0.0)) {
    throw DomainError("envelope fit needs a positive window with >= 2 points");
  }

  // Window centres log-spaced on [t_lo, t_hi]; windows reaching t <= 0 are dropped.
  const std::size_t m = options.points_per_window;
  const double half = 0.5 * options.window_width;
  std::vector<double> centres;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double c = std::exp(std::log(t_lo) + (std::log(t_hi) - std::log(t_lo)) *
                                                   static_cast<double>(i) /
                                                   static_cast<double>(n_samples - 1));
    if (c - half > 0.0) centres.push_back(c);
  }
  std::vector<double> times;
  times.reserve(centres.size() * m);
  for (double c : centres) {
    for (std::size_t j = 0; j < m; ++j) {
      times.push_back(c - half + options.window_width * static_cast<double>(j) /
                                     static_cast<double>(m));
    }
  }
  const std::vector<SinCosCoefficients> values = source(times);
  if (values.size() != times.size()) throw DomainError("coefficient source size mismatch");

  std::vector<double> log_t, log_rms_s, log_rms_c, kappa_s, kappa_c;
  for (std::size_t w = 0; w < centres.size(); ++w) {
    double ss = 0.0, cc = 0.0, mean_s = 0.0, mean_c = 0.0, mean_growth = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const auto& v = values[w * m + j];
      ss += v.S * v.S;
      cc += v.C * v.C;
      mean_s += v.S;
      mean_c += v.C;
      mean_growth += std::pow(times[w * m + j], 1.0 - coeffs.alpha);
    }
    const double rms_s = std::sqrt(ss / static_cast<double>(m));
    const double rms_c = std::sqrt(cc / static_cast<double>(m));
    if (!(rms_s > 0.0) || !(rms_c > 0.0) || !std::isfinite(rms_s) || !std::isfinite(rms_c)) {
      continue;
    }
    log_t.push_back(std::log(centres[w]));
    log_rms_s.push_back(std::log(rms_s));
    log_rms_c.push_back(std::log(rms_c));
    if (centres[w] >= t_hi / 10.0 * (1.0 - 1e-12)) {
      kappa_s.push_back(mean_s / (coeffs.C_s * mean_growth));
      kappa_c.push_back(mean_c / (coeffs.C_c * mean_growth));
    }
  }
  if (log_t.size() < 3) throw FitError("envelope fit: fewer than 3 usable windows");
  if (kappa_s.empty()) throw FitError("envelope fit: no usable window in the top decade");

  EnvelopeFit fit;
  fit.exponent_s = slope(log_t, log_rms_s);
  fit.exponent_c = slope(log_t, log_rms_c);
  const Ratio ks = summarize(kappa_s);
  const Ratio kc = summarize(kappa_c);
  fit.kappa_s = ks.mean;
  fit.kappa_c = kc.mean;
  fit.kappa_s_drift = ks.drift;
  fit.kappa_c_drift = kc.drift;
  fit.windows = log_t.size();
  fit.top_decade_windows = kappa_s.size();
  return fit;
}

EnvelopeFit empirical_envelope_fit(const ForcingParams& params, const Truncation& trunc,
                                   double t_lo, double t_hi, std::size_t n_samples,
                                   const ToleranceConfig& tol, const FitOptions& options) {
  const EnvelopeCoefficients coeffs = envelope_coefficients(params, tol);
  const CoefficientSource exact = [&](std::span<const double> times) {
    const auto parts = decompose_grid(params, trunc, times);
    std::vector<SinCosCoefficients> out(parts.size());
    std::transform(parts.begin(), parts.end(), out.begin(),
                   [](const SeriesDecomposition& d) { return SinCosCoefficients{d.S, d.C}; });
    return out;
  };
  return fit_envelope(exact, coeffs, t_lo, t_hi, n_samples, options);
}

}  // namespace subres
