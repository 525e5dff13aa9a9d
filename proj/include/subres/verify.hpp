#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace subres::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the invariant suite (identities, dual paths, bounds, integrator
/// agreement) at reduced sizes. Takes a few seconds.
std::vector<CheckResult> run_suite();

/// Prints one line per check and a summary; returns true when all pass.
bool report(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace subres::verify
