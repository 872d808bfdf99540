#pragma once

#include <string>
#include <vector>

namespace bookcross {

// One corpus verification suite: a named batch of oracle comparisons with a
// pass/fail verdict and optional report lines (tables, flagged rows).
struct SuiteResult {
  std::string name;
  bool passed = false;
  long long checked = 0;
  long long mismatches = 0;
  double seconds = 0.0;
  std::vector<std::string> lines;
};

std::vector<std::string> verify_suite_names();

// Runs one suite to completion; throws Error for unknown names.
SuiteResult run_verify_suite(const std::string& name);

}  // namespace bookcross
