// Acceptance gate: every golden criterion, one pass/fail line each.
#include <cstdio>

#include "sleif/verify.hpp"

int main() {
  const auto checks = sleif::run_acceptance_checks();
  int failures = 0;
  for (const auto& c : checks) {
    std::printf("%s %-34s delta=%-12.4g tol=%-10.4g %s\n",
                c.passed ? "PASS" : "FAIL", c.name.c_str(), c.delta,
                c.tolerance, c.detail.c_str());
    if (!c.passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", int(checks.size()) - failures,
              checks.size());
  return failures == 0 ? 0 : 1;
}
