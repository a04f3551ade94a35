#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace longwave {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Quick oracle and invariant checks over the spectral core, the models and
/// both LWP schemes. Runs in a few seconds.
std::vector<CheckResult> run_validation_suite();

/// Prints one "PASS"/"FAIL" line per check; returns true if all passed.
bool report_checks(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace longwave
