// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "subres/asymptotics.hpp"
#include "subres/cli.hpp"
#include "subres/grid.hpp"
#include "subres/kernels.hpp"
#include "subres/modal.hpp"
#include "subres/oracle.hpp"
#include "subres/special.hpp"

using namespace subres;

namespace {

const double kPi = std::numbers::pi;

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string fix(double v, int digits = 4) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const ForcingParams params(2, 3);
  const Truncation trunc(200);
  const auto grid = make_grid({0.0, 200.0, 2001, Spacing::linear});
  IntegratorConfig cfg;
  cfg.rel_tol = 1e-9;
  const auto exact = superposed_solution(params, trunc, grid);
  const auto numeric = integrate_ivp(params, trunc, grid, cfg);
  double err = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    err = std::max(err, std::abs(exact.samples[i].u - numeric.samples[i].u));
  }
  const double elapsed = seconds_since(start);
  return {err <= 1e-6 && elapsed < 60.0,
          "max |u_closed_form - u_integrator| = " + sci(err) + " (<= 1e-6), " + fix(elapsed, 2) + " s (< 60)"};
}

Outcome decomposition_identities() {
  const ModeTable table(ForcingParams(2, 3), Truncation(500));
  std::mt19937_64 rng(1000);
  std::uniform_real_distribution<double> dist(0.0, 1e4);
  double identity = 0.0, cancellation = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double t = dist(rng);
    const auto d = kernels::decomposition_point(table, t);
    const double u = kernels::solution_point(table, t).u;
    identity = std::max(identity, std::abs(d.S * std::sin(t) + d.C * std::cos(t) - u) / (1.0 + std::abs(u)));
    cancellation = std::max(cancellation, std::abs(d.S_rem * std::sin(t) + d.C_rem * std::cos(t)));
  }
  return {identity <= 1e-10 && cancellation <= 1e-10,
          "identity " + sci(identity) + ", remainder cancellation " + sci(cancellation) + " (<= 1e-10)"};
}

Outcome dual_representations() {
  const ForcingParams params(2, 3);
  const ToleranceConfig tol;
  double sigma = 0.0;
  for (double t : {0.1, 1.0, 5.0}) {
    sigma = std::max(sigma, std::abs(sigma_sums_converged(params, t).sigma_s -
                                     sigma_s_maclaurin(params, t, tol)));
  }
  double integrals = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const double alpha = 0.1 * i;
    integrals = std::max(integrals, std::abs(singular_integral_sine(alpha, tol).value -
                                             termwise_integral_sine(alpha)));
    integrals = std::max(integrals, std::abs(singular_integral_sine_squared(alpha, tol).value -
                                             termwise_integral_sine_squared(alpha)));
  }
  // Si(pi/2) to 20 digits.
  const double si = std::abs(singular_integral_sine(1.0, tol).value - 1.3707621681544884801);
  return {sigma <= 1e-9 && integrals <= 1e-10 && si <= 1e-8,
          "sigma_s " + sci(sigma) + " (<= 1e-9), integrals " + sci(integrals) +
              " (<= 1e-10), Si(pi/2) " + sci(si) + " (<= 1e-8)"};
}

Outcome zeta_accuracy() {
  const double err = std::max({std::abs(zeta(2.0) - kPi * kPi / 6.0),
                               std::abs(zeta(4.0) - std::pow(kPi, 4) / 90.0),
                               std::abs(zeta(8.0) - std::pow(kPi, 8) / 9450.0)});
  return {err <= 1e-12, "max error " + sci(err) + " (<= 1e-12)"};
}

// S(t) and C(t) converge slowly in the number of modes: the truncated tail of
// sigma_s is about t/N. 20000 modes keep it below 0.5% of the envelope at 1e5.
constexpr std::size_t kEnvelopeTerms = 20000;

Outcome envelope_exponent() {
  const auto start = std::chrono::steady_clock::now();
  const auto fit = empirical_envelope_fit(ForcingParams(2, 3), Truncation(kEnvelopeTerms), 1e3, 1e5, 24);
  const double elapsed = seconds_since(start);
  const double target = 2.0 / 3.0;
  return {std::abs(fit.exponent_s - target) <= 0.05 && std::abs(fit.exponent_c - target) <= 0.05 &&
              elapsed < 120.0,
          "slope S " + fix(fit.exponent_s) + ", slope C " + fix(fit.exponent_c) +
              " (2/3 +- 0.05), " + std::to_string(fit.windows) + " windows, " + fix(elapsed, 2) +
              " s (< 120)"};
}

Outcome envelope_constants() {
  const auto fit = empirical_envelope_fit(ForcingParams(2, 3), Truncation(kEnvelopeTerms), 1e4, 1e5, 24);
  return {fit.kappa_s_drift < 0.1 && fit.kappa_c_drift < 0.1,
          "kappa_s " + fix(fit.kappa_s) + " (drift " + fix(100 * fit.kappa_s_drift, 2) + "%), kappa_c " +
              fix(fit.kappa_c) + " (drift " + fix(100 * fit.kappa_c_drift, 2) + "%), limit 10%"};
}

Outcome cutoff_values() {
  const auto c = oscillation_cutoffs(ForcingParams(2, 3), 10000.0);
  return {c.N == 18 && c.M == 14, "N = " + std::to_string(c.N) + ", M = " + std::to_string(c.M)};
}

Outcome phase_limit() {
  double previous = INFINITY;
  bool decreasing = true;
  std::string values;
  for (double alpha : {0.5, 0.3, 0.1, 0.05}) {
    const double phi = envelope_coefficients(ForcingParams(1.0 + 3.0 * alpha, 3.0)).phi_alpha;
    decreasing = decreasing && std::abs(phi) < previous;
    previous = std::abs(phi);
    values += (values.empty() ? "" : ", ") + fix(phi);
  }
  return {decreasing, "phi_alpha at alpha = 0.5, 0.3, 0.1, 0.05: " + values};
}

Outcome bounds() {
  const ForcingParams params(2, 3);
  bool majorant = true;
  for (int i = 0; i <= 500; ++i) {
    const double t = 5.0 * i / 500;
    majorant = majorant && sigma_bound_check(params, t, sigma_sums_converged(params, t).sigma_s);
  }
  // Reference forcing from 200000 modes; its own tail is below 5e-6.
  const ModeTable coarse(params, Truncation(100));
  const ModeTable fine(params, Truncation(200000));
  const auto grid = make_grid({0.0, 100.0, 1001, Spacing::linear});
  std::vector<double> a(grid.size()), b(grid.size());
  kernels::forcing(coarse, grid, a, Execution::parallel);
  kernels::forcing(fine, grid, b, Execution::parallel);
  double err = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
  return {majorant && err <= 0.01,
          std::string("majorant ") + (majorant ? "holds" : "violated") + " on [0, 5]; truncation error " +
              sci(err) + " (<= 0.01, analytic bound " + sci(forcing_tail_bound(params, 100)) + ")"};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "subres_acceptance";
  std::filesystem::create_directories(dir);
  const std::string cfg = std::string(SUBRES_CONFIG_DIR) + "/fig2.cfg";
  std::vector<std::string> outputs;
  for (const char* name : {"first.csv", "second.csv"}) {
    const std::string out = (dir / name).string();
    const char* argv[] = {"subres", "--config", cfg.c_str(), "--out", out.c_str()};
    std::ostringstream log;
    if (cli::run(5, argv, log) != 0) return {false, "envelope run failed: " + log.str()};
    outputs.push_back(slurp(out));
  }
  std::filesystem::remove_all(dir);
  const bool same = outputs[0] == outputs[1] && !outputs[0].empty();
  return {same, std::to_string(outputs[0].size()) + " bytes, " + (same ? "identical" : "different")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"decomposition identities", decomposition_identities},
      {"dual representations", dual_representations},
      {"zeta accuracy", zeta_accuracy},
      {"subresonant exponent", envelope_exponent},
      {"envelope constants", envelope_constants},
      {"cutoff values", cutoff_values},
      {"alpha -> 0 phase limit", phase_limit},
      {"bounds", bounds},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  [" << i + 1 << "] " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
