#pragma once

#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "subres/forcing.hpp"
#include "subres/grid.hpp"
#include "subres/oracle.hpp"
#include "subres/special.hpp"

namespace subres::cli {

enum class Command { forcing, solve, decompose, envelope, sweep, verify, profile };

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kNumericalFailure = 3,
};

struct RunConfig {
  Command command = Command::solve;
  double k = 2.0;
  double p = 3.0;
  std::size_t n_terms = kDefaultTerms;
  double tail_tol = 0.0;
  GridSpec grid{};
  std::string output_path;  // empty: stdout
  bool emit_plot = false;
  ToleranceConfig tolerances{};
  IntegratorConfig integrator{};
  std::size_t fit_samples = 24;
  std::vector<double> sweep_k;
  std::vector<double> sweep_p;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses flags (and an optional --config file; flags win). Throws UsageError.
RunConfig parse_args(int argc, const char* const* argv);

/// Effective configuration as a config file that parse_args accepts.
std::string serialize(const RunConfig& config);

/// Executes a parsed configuration; returns an ExitCode. Output files are
/// written to a temporary name and renamed only on success.
int execute(const RunConfig& config, std::ostream& log);

/// parse_args + execute with error-to-exit-code mapping.
int run(int argc, const char* const* argv, std::ostream& log);

}  // namespace subres::cli
