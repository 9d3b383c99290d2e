// Acceptance gate: runs every advertised guarantee at its pinned budget and
// prints one pass/fail line per criterion.

#include <cstdio>
#include <exception>
#include <vector>

#include "nilhoro/suites.hpp"

int main() {
  using namespace nilhoro::suites;
  SuiteConfig cfg;  // pinned defaults
  std::vector<CriterionResult> results;
  try {
    results = run_acceptance(cfg);
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 1;
  }

  bool all_pass = true;
  for (const auto& r : results) {
    const bool ok = r.passed();
    all_pass = all_pass && ok;
    std::printf("criterion %2d [%s]: %s\n", r.number, r.label.c_str(), ok ? "PASS" : "FAIL");
    for (const auto& c : r.checks) {
      if (c.status == CheckStatus::Pass) continue;
      std::printf("    %s: %s (expected %s, got %s)\n", c.id.c_str(), to_string(c.status),
                  c.expected.c_str(), c.actual.c_str());
    }
  }
  std::printf("%s\n", all_pass ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
  return all_pass ? 0 : 1;
}
