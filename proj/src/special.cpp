#include "subres/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "subres/errors.hpp"
#include "subres/quadrature.hpp"
#include "subres/summation.hpp"

namespace subres {

void ToleranceConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("tolerances must be positive");
  if (!(split_point > 0.0) || split_point > std::numbers::pi / 2) {
    throw DomainError("split_point must lie in (0, pi/2]");
  }
  if (max_series_terms < 1) throw DomainError("max_series_terms must be positive");
}

namespace {

// B_{2j} / (2j)! for j = 1..7.
constexpr std::array<double, 7> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
};

constexpr std::size_t kZetaCutoff = 16;

}  // namespace

double zeta(double s) {
  if (!(s > 1.0) || std::isnan(s)) throw DomainError("zeta(s) requires s > 1");
  if (std::isinf(s)) return 1.0;
  // Direct sum to N-1 (smallest terms first), integral tail from N, then
  // Euler-Maclaurin: N^-s/2 + sum_j B_2j/(2j)! s(s+1)...(s+2j-2) N^(-s-2j+1).
  const double N = static_cast<double>(kZetaCutoff);
  CompensatedSum sum;
  for (std::size_t n = kZetaCutoff - 1; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
  sum += std::pow(N, 1.0 - s) / (s - 1.0);
  const double n_pow = std::pow(N, -s);
  sum += 0.5 * n_pow;
  double rising = s;          // s (s+1) ... (s+2j-2)
  double power = n_pow / N;   // N^(-s-2j+1)
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    sum += kBernoulliOverFactorial[j] * rising * power;
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    power /= N * N;
  }
  return sum.value();
}

namespace {

// Shared driver for sum_j (-1)^(j-1) c_j zeta(e_j) with c_j built by a ratio
// recurrence; stops when the next term is below abs_tol.
template <class Coefficient, class Exponent>
double zeta_series(double first, Coefficient ratio, Exponent exponent, const ToleranceConfig& tol,
                   const char* name) {
  tol.validate();
  CompensatedSum sum;
  double c = first;
  for (std::size_t j = 1; j <= tol.max_series_terms; ++j) {
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    sum += sign * c * zeta(exponent(j));
    c *= ratio(j);
    if (std::abs(c) * zeta(exponent(j + 1)) < tol.abs_tol) return sum.value();
  }
  throw ConvergenceError(std::string(name) + ": series did not converge within max_series_terms");
}

}  // namespace

double sigma_s_maclaurin(const ForcingParams& params, double t, const ToleranceConfig& tol) {
  if (!std::isfinite(t)) throw DomainError("sigma_s_maclaurin needs finite t");
  const double k = params.k();
  const double p = params.p();
  // c_j = t^(2j-1) / (2j-1)!
  return zeta_series(
      t, [t](std::size_t j) { return t * t / ((2.0 * j) * (2.0 * j + 1.0)); },
      [k, p](std::size_t j) { return 2.0 * (static_cast<double>(j) - 1.0) * p + k; }, tol,
      "sigma_s_maclaurin");
}

double sigma_c_maclaurin(const ForcingParams& params, double t, const ToleranceConfig& tol) {
  if (!std::isfinite(t)) throw DomainError("sigma_c_maclaurin needs finite t");
  const double k = params.k();
  const double p = params.p();
  // c_j = t^(2j) / (2 (2j)!)
  return zeta_series(
      0.25 * t * t, [t](std::size_t j) { return t * t / ((2.0 * j + 1.0) * (2.0 * j + 2.0)); },
      [k, p](std::size_t j) { return (2.0 * static_cast<double>(j) - 1.0) * p + k; }, tol,
      "sigma_c_maclaurin");
}

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("singular integral diverges at 0 for alpha <= 0");
  }
}

constexpr std::size_t kTermwiseCap = 400;

// int_0^x tau^(alpha-2) sin(tau) = sum_{j>=0} (-1)^j x^(alpha+2j) / ((2j+1)! (alpha+2j))
double sine_series(double alpha, double x, std::size_t cap) {
  CompensatedSum sum;
  const double lead = std::pow(x, alpha);
  double q = 1.0;  // x^(2j) / (2j+1)!
  for (std::size_t j = 0; j < cap; ++j) {
    const double term = ((j % 2 == 0) ? 1.0 : -1.0) * lead * q / (alpha + 2.0 * j);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum.value()) && 2.0 * j > x) return sum.value();
    q *= x * x / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
  }
  throw ConvergenceError("sine series did not converge");
}

// int_0^x tau^(alpha-2) sin^2(tau/2) = 1/2 sum_{j>=1} (-1)^(j-1) x^(alpha+2j-1) / ((2j)! (alpha+2j-1))
double sine_squared_series(double alpha, double x, std::size_t cap) {
  CompensatedSum sum;
  const double lead = std::pow(x, alpha - 1.0);
  double q = 0.5 * x * x;  // x^(2j) / (2j)!
  for (std::size_t j = 1; j <= cap; ++j) {
    const double term = ((j % 2 == 1) ? 0.5 : -0.5) * lead * q / (alpha + 2.0 * j - 1.0);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum.value()) && 2.0 * j > x) return sum.value();
    q *= x * x / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
  }
  throw ConvergenceError("sine-squared series did not converge");
}

template <class Integrand, class Series>
SingularIntegral split_integral(double alpha, const ToleranceConfig& tol, double upper,
                                Integrand integrand, Series series) {
  check_alpha(alpha);
  tol.validate();
  if (!(upper > 0.0) || !std::isfinite(upper)) throw DomainError("upper limit must be positive");
  const double split = std::min(tol.split_point, upper);
  SingularIntegral result;
  result.outside_growth_regime = alpha >= 1.0;
  result.value = series(alpha, split, tol.max_series_terms);
  if (split < upper) {
    const auto q = quadrature::integrate(integrand, split, upper, tol.abs_tol, tol.rel_tol);
    if (!q.converged) throw ConvergenceError("adaptive quadrature hit its interval cap");
    result.value += q.value;
    result.error_estimate = q.error;
  }
  return result;
}

}  // namespace

SingularIntegral singular_integral_sine(double alpha, const ToleranceConfig& tol, double upper) {
  return split_integral(
      alpha, tol, upper,
      [alpha](double tau) { return std::pow(tau, alpha - 2.0) * std::sin(tau); }, sine_series);
}

SingularIntegral singular_integral_sine_squared(double alpha, const ToleranceConfig& tol,
                                                double upper) {
  return split_integral(
      alpha, tol, upper,
      [alpha](double tau) {
        const double h = std::sin(0.5 * tau);
        return std::pow(tau, alpha - 2.0) * h * h;
      },
      sine_squared_series);
}

double termwise_integral_sine(double alpha, double upper) {
  check_alpha(alpha);
  return sine_series(alpha, upper, kTermwiseCap);
}

double termwise_integral_sine_squared(double alpha, double upper) {
  check_alpha(alpha);
  return sine_squared_series(alpha, upper, kTermwiseCap);
}

double sine_integral(double x) {
  // Si(x) = sum_j (-1)^j x^(2j+1) / ((2j+1) (2j+1)!)
  CompensatedSum sum;
  double q = x;  // x^(2j+1) / (2j+1)!
  for (std::size_t j = 0; j < kTermwiseCap; ++j) {
    const double term = ((j % 2 == 0) ? 1.0 : -1.0) * q / (2.0 * j + 1.0);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum.value()) && 2.0 * j > std::abs(x)) break;
    q *= x * x / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
  }
  return sum.value();
}

}  // namespace subres
