#include "subres/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "subres/asymptotics.hpp"
#include "subres/grid.hpp"
#include "subres/kernels.hpp"
#include "subres/modal.hpp"
#include "subres/oracle.hpp"
#include "subres/special.hpp"

namespace subres::verify {

namespace {

std::string show(double value) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << value;
  return os.str();
}

CheckResult bounded(std::string name, double observed, double limit) {
  return {std::move(name), observed <= limit, "max error " + show(observed) + " (limit " + show(limit) + ")"};
}

CheckResult zeta_values() {
  const double pi = std::numbers::pi;
  const double err = std::max({std::abs(zeta(2.0) - pi * pi / 6.0),
                               std::abs(zeta(4.0) - std::pow(pi, 4) / 90.0),
                               std::abs(zeta(8.0) - std::pow(pi, 8) / 9450.0)});
  return bounded("zeta(2), zeta(4), zeta(8) closed forms", err, 1e-12);
}

CheckResult unit_mode() {
  const ForcingParams params(2.0, 3.0);
  double err = 0.0;
  for (double t = 0.0; t <= 50.0; t += 0.37) {
    err = std::max(err, std::abs(mode_solution(params, 1, t) - (1.0 - std::cos(t))));
  }
  return bounded("first mode equals 1 - cos t", err, 1e-14);
}

CheckResult decomposition_identities() {
  const ForcingParams params(2.0, 3.0);
  const ModeTable table(params, Truncation(500));
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> dist(0.0, 1e4);
  double identity = 0.0;
  double cancellation = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double t = dist(rng);
    const auto d = kernels::decomposition_point(table, t);
    const double u = kernels::solution_point(table, t).u;
    identity = std::max(identity, std::abs(d.S * std::sin(t) + d.C * std::cos(t) - u) / (1.0 + std::abs(u)));
    cancellation = std::max(cancellation, std::abs(d.S_rem * std::sin(t) + d.C_rem * std::cos(t)));
  }
  CheckResult r = bounded("S sin t + C cos t = u and remainder cancellation", std::max(identity, cancellation), 1e-10);
  return r;
}

CheckResult sigma_dual() {
  const ForcingParams params(2.0, 3.0);
  double err = 0.0;
  for (double t : {0.1, 1.0, 5.0}) {
    err = std::max(err, std::abs(sigma_sums_converged(params, t).sigma_s -
                                 sigma_s_maclaurin(params, t, ToleranceConfig{})));
  }
  return bounded("sigma_s direct vs Maclaurin-zeta", err, 1e-9);
}

CheckResult integral_dual() {
  double err = 0.0;
  const ToleranceConfig tol;
  for (int i = 1; i <= 9; ++i) {
    const double alpha = 0.1 * i;
    err = std::max(err, std::abs(singular_integral_sine(alpha, tol).value - termwise_integral_sine(alpha)));
    err = std::max(err, std::abs(singular_integral_sine_squared(alpha, tol).value -
                                 termwise_integral_sine_squared(alpha)));
  }
  return bounded("singular integrals: split quadrature vs termwise series", err, 1e-10);
}

CheckResult sine_integral_limit() {
  const double err = std::abs(singular_integral_sine(1.0, ToleranceConfig{}).value -
                              sine_integral(std::numbers::pi / 2));
  return bounded("alpha = 1 integral equals Si(pi/2)", err, 1e-8);
}

CheckResult cutoffs() {
  const auto c = oscillation_cutoffs(ForcingParams(2.0, 3.0), 10000.0);
  return {"cutoffs at t = 10000, p = 3", c.N == 18 && c.M == 14,
          "N = " + std::to_string(c.N) + ", M = " + std::to_string(c.M)};
}

CheckResult integrator_agreement() {
  const ForcingParams params(2.0, 3.0);
  const Truncation trunc(50);
  const auto grid = make_grid({0.0, 50.0, 501, Spacing::linear});
  const auto exact = superposed_solution(params, trunc, grid);
  const auto numeric = integrate_ivp(params, trunc, grid, IntegratorConfig{});
  double err = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    err = std::max(err, std::abs(exact.samples[i].u - numeric.samples[i].u));
  }
  return bounded("integrator vs closed form on [0, 50]", err, 1e-6);
}

CheckResult truncation_bound() {
  const ForcingParams params(2.0, 3.0);
  const ModeTable coarse(params, Truncation(100));
  const ModeTable fine(params, Truncation(100000));
  double err = 0.0;
  for (double t = 0.0; t <= 100.0; t += 2.5) {
    err = std::max(err, std::abs(kernels::forcing_point(fine, t) - kernels::forcing_point(coarse, t)));
  }
  return bounded("forcing truncation error at 100 terms", err, forcing_tail_bound(params, 100));
}

CheckResult phase_limit() {
  const double p = 3.0;
  double previous = INFINITY;
  bool ok = true;
  std::ostringstream detail;
  for (double alpha : {0.5, 0.3, 0.1, 0.05}) {
    const double phi = envelope_coefficients(ForcingParams(1.0 + alpha * p, p)).phi_alpha;
    ok = ok && std::abs(phi) < previous;
    previous = std::abs(phi);
    detail << "phi(" << alpha << ")=" << phi << ' ';
  }
  return {"|phi_alpha| decreases as alpha -> 0", ok, detail.str()};
}

CheckResult majorant() {
  const ForcingParams params(2.0, 3.0);
  bool ok = true;
  for (double t = 0.0; t <= 5.0; t += 0.25) {
    ok = ok && sigma_bound_check(params, t, sigma_sums_converged(params, t).sigma_s);
  }
  return {"|sigma_s| <= zeta(k) sinh t on [0, 5]", ok, ""};
}

CheckResult drivers_agree() {
  const ForcingParams params(2.0, 3.0);
  const ModeTable table(params, Truncation(200));
  const auto grid = make_grid({0.0, 1000.0, 257, Spacing::linear});
  std::vector<SeriesDecomposition> a(grid.size()), b(grid.size());
  kernels::serial::decomposition(table, grid, a);
  kernels::parallel::decomposition(table, grid, b);
  bool same = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    same = same && a[i].S == b[i].S && a[i].C == b[i].C && a[i].sigma_c == b[i].sigma_c;
  }
  return {"serial and parallel kernels bit-identical", same,
          std::to_string(kernels::max_threads()) + " threads"};
}

}  // namespace

std::vector<CheckResult> run_suite() {
  const std::vector<std::function<CheckResult()>> checks = {
      zeta_values,   unit_mode,         decomposition_identities, sigma_dual,
      integral_dual, sine_integral_limit, cutoffs,                integrator_agreement,
      truncation_bound, phase_limit,    majorant,                 drivers_agree};
  std::vector<CheckResult> results;
  for (const auto& check : checks) {
    try {
      results.push_back(check());
    } catch (const std::exception& e) {
      results.push_back({"(check threw)", false, e.what()});
    }
  }
  return results;
}

bool report(const std::vector<CheckResult>& results, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
    if (!r.detail.empty()) out << "  [" << r.detail << ']';
    out << '\n';
    if (!r.passed) ++failed;
  }
  out << results.size() - failed << '/' << results.size() << " checks passed\n";
  return failed == 0;
}

}  // namespace subres::verify
