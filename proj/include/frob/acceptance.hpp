// The exit-gate checks, shared by the acceptance test binary and
// `frob selftest`. Every check is exact; each has a wall-clock budget.
#pragma once

#include <string>
#include <vector>

namespace frob::acceptance {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;  // first mismatch on failure, a summary otherwise
  double seconds;
  double budget_seconds;
};

std::vector<CriterionResult> run_all();

}  // namespace frob::acceptance
