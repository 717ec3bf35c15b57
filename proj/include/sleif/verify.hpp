#pragma once

#include <string>
#include <vector>

namespace sleif {

struct CheckResult {
  std::string name;
  bool passed = false;
  double delta = 0.0;      // measured worst-case deviation
  double tolerance = 0.0;  // pinned acceptance tolerance
  std::string detail;
};

/// Golden verification suite: reference-table reproductions, closed-form
/// oracles and the structural identities of the solver, each at a pinned
/// tolerance.  Every check is deterministic.
std::vector<CheckResult> run_acceptance_checks();

}  // namespace sleif
