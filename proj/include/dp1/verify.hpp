#pragma once

#include <string>
#include <vector>

namespace dp1 {

// One entry of the acceptance checklist.  `detail` carries the measured
// quantities on success and the first failure message otherwise.
struct CriterionResult {
  int number{};
  std::string name;
  bool passed{};
  std::string detail;
};

// Runs the full acceptance checklist (exact arithmetic throughout).  Each
// criterion is independent: a failure in one is caught and reported without
// aborting the rest.
std::vector<CriterionResult> run_acceptance_suite();

bool all_passed(const std::vector<CriterionResult>& results);

// Fixed-width one-line-per-criterion rendering, ending with a summary line.
std::string format_acceptance_table(const std::vector<CriterionResult>& results);

} // namespace dp1
