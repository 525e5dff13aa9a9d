#include "subres/modal.hpp"

#include <algorithm>
#include <cmath>

#include "mode_terms.hpp"
#include "subres/errors.hpp"
#include "subres/kernels.hpp"
#include "subres/special.hpp"
#include "subres/summation.hpp"

namespace subres {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::closed_form:
      return "closed_form";
    case Method::integrator:
      return "integrator";
    case Method::asymptotic:
      return "asymptotic";
  }
  return "unknown";
}

double mode_solution(const ForcingParams& params, std::size_t n, double t) {
  if (n < 1) throw DomainError("mode index starts at 1");
  const detail::ModeTerms m = detail::mode_terms(params.k(), params.p(), n);
  const double theta = t * m.gap;
  const double h = std::sin(0.5 * theta);
  // Same association as kernels::solution_point, so a one-term sum matches bit for bit.
  return std::sin(t) * (m.response * std::sin(theta)) +
         std::cos(t) * (m.response * -(2.0 * h * h));
}

double mode_velocity(const ForcingParams& params, std::size_t n, double t) {
  if (n < 1) throw DomainError("mode index starts at 1");
  const detail::ModeTerms m = detail::mode_terms(params.k(), params.p(), n);
  const double theta = t * m.gap;
  const double h = std::sin(0.5 * theta);
  return std::sin(t) * (m.response * (2.0 * h * h + m.gap * std::cos(theta))) +
         std::cos(t) * (m.response * ((1.0 - m.gap) * std::sin(theta)));
}

SolutionSeries superposed_solution(const ForcingParams& params, const Truncation& trunc,
                                   std::span<const double> grid, Execution exec) {
  const ModeTable table(params, trunc);
  SolutionSeries series{std::vector<Sample>(grid.size()), Method::closed_form, params, trunc};
  kernels::solution(table, grid, series.samples, exec);
  return series;
}

SeriesDecomposition decompose_series(const ForcingParams& params, const Truncation& trunc,
                                     double t) {
  return kernels::decomposition_point(ModeTable(params, trunc), t);
}

std::vector<SeriesDecomposition> decompose_grid(const ForcingParams& params,
                                                const Truncation& trunc,
                                                std::span<const double> grid, Execution exec) {
  const ModeTable table(params, trunc);
  std::vector<SeriesDecomposition> out(grid.size());
  kernels::decomposition(table, grid, out, exec);
  return out;
}

bool sigma_bound_check(const ForcingParams& params, double t, double sigma_s_value) {
  if (!(t >= 0.0)) throw DomainError("sigma_bound_check needs t >= 0");
  return std::abs(sigma_s_value) <= zeta(params.k()) * std::sinh(t);
}

SigmaSums sigma_sums_converged(const ForcingParams& params, double t, std::size_t min_direct) {
  const double k = params.k();
  const double p = params.p();
  const double a = p - k;
  const double reach = std::ceil(std::pow(4.0 * std::abs(t), 1.0 / p));
  const std::size_t N = std::max<std::size_t>(
      std::max<std::size_t>(min_direct, 2), static_cast<std::size_t>(std::max(reach, 2.0)));

  CompensatedSum direct_s, direct_c;
  for (std::size_t i = 1; i < N; ++i) {
    const double n = static_cast<double>(i);
    const double w = std::pow(n, a);
    const double theta = t * std::pow(n, -p);
    const double h = std::sin(0.5 * theta);
    direct_s += w * std::sin(theta);
    direct_c += w * (h * h);
  }

  // Tail sum_{n >= N} g(n) ~ int_N^inf g + g(N)/2 - g'(N)/12; the next
  // Euler-Maclaurin term is O(t N^(-k-3)).
  const double Nd = static_cast<double>(N);
  const double y = t * std::pow(Nd, -p);  // |y| <= 1/4
  const double scale = t * std::pow(Nd, 1.0 - k);

  CompensatedSum int_s, int_c;
  double y_pow = 1.0;      // y^(2j-2)
  double factorial = 1.0;  // (2j-1)!
  for (int j = 1; j <= 60; ++j) {
    if (j > 1) factorial *= (2.0 * j - 2.0) * (2.0 * j - 1.0);
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    const double ts = sign * y_pow / (factorial * (k - 1.0 + 2.0 * (j - 1) * p));
    // sin^2 tail: y^(2j-1) / (2 (2j)! ((2j-1)p + k - 1))
    const double tc =
        sign * y_pow * y / (2.0 * factorial * (2.0 * j) * ((2.0 * j - 1.0) * p + k - 1.0));
    int_s += ts;
    int_c += tc;
    y_pow *= y * y;
    if (std::abs(ts) < 1e-18 * std::abs(int_s.value()) &&
        std::abs(tc) <= 1e-18 * std::abs(int_c.value())) {
      break;
    }
  }

  const double theta_N = y;
  const double w_N = std::pow(Nd, a);
  const double h_N = std::sin(0.5 * theta_N);
  const double g_s = w_N * std::sin(theta_N);
  const double g_c = w_N * h_N * h_N;
  const double dg_s = a * w_N / Nd * std::sin(theta_N) - p * theta_N * w_N / Nd * std::cos(theta_N);
  const double dg_c = a * w_N / Nd * h_N * h_N - 0.5 * p * theta_N * w_N / Nd * std::sin(theta_N);

  return {direct_s.value() + scale * int_s.value() + 0.5 * g_s - dg_s / 12.0,
          direct_c.value() + scale * int_c.value() + 0.5 * g_c - dg_c / 12.0};
}

}  // namespace subres
