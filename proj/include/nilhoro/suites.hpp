#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nilhoro::suites {

enum class CheckStatus { Pass, Fail, BudgetExceeded };

const char* to_string(CheckStatus s);

struct Check {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string expected;
  std::string actual;
};

// Budgets for the verification suites. The defaults pin the advertised
// desk-scale guarantees; flags can scale them up.
struct SuiteConfig {
  int metric_radius = 12;    // exhaustive formula-vs-BFS ball
  int overlap_radius = 10;   // branch agreement / symmetry ball
  int reversal_len = 8;      // transition-reversal word length
  int two_letter_len = 12;   // two-letter geodesic scan
  int window = 4;            // boundary window radius
  int probe_t_max = 40;      // convergence probe budget
  int action_window = 5;     // action agreement window
  int action_ball = 4;       // acting elements
  int census_ball = 4;
  int param_range = 3;       // |m|,|n|,|l| bound for point grids
  int conv_param_range = 2;  // path family grid
  int separation_window = 10;
  int facet_len = 12;        // geodesic scan over facet alphabets
  int max_len = 12;          // rearrangement search cap
  int ex1_radius = 10;       // reaches d(g, (ab)^3) = 10
  int ex1_word_len = 10;     // staircase cross-check
  int ex1_perm_l = 5;
  int ex1_eta_l = 3;
  std::uint64_t seed = 0x5eedULL;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double wall_ms = 0.0;

  bool passed() const;
};

/// metric, boundary, facets, example1, all.
std::vector<std::string> suite_names();

/// Runs the named suite; throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

struct CriterionResult {
  int number = 0;
  std::string label;
  std::vector<Check> checks;

  bool passed() const;
};

/// The ten acceptance criteria, in order, each reduced to exact checks.
std::vector<CriterionResult> run_acceptance(const SuiteConfig& cfg);

}  // namespace nilhoro::suites
