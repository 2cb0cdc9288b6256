#pragma once

#include <string>
#include <vector>

namespace ckosc {

struct CheckResult {
  std::string name;
  std::string module;
  std::string relation;  // "<=" : observed must not exceed tolerance, ">=" : must reach it
  double tolerance = 0.0;
  double observed = 0.0;
  bool passed = false;
};

struct ValidationOptions {
  /// Fault injection: multiplies the derived frequency omega of every
  /// scenario after validation. 1.0 leaves the physics untouched.
  double omega_corruption = 1.0;
};

/// Runs the invariant suite across all modules.
std::vector<CheckResult> run_validation(const ValidationOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

std::string format_report_table(const std::vector<CheckResult>& results);
std::string format_report_json(const std::vector<CheckResult>& results);

}  // namespace ckosc
