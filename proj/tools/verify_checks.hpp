#pragma once

#include <string>
#include <vector>

namespace algas::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;   // the quantity compared against the threshold
  double threshold = 0.0;
  std::string detail;      // human-readable context (values, parameters)
};

/// The fourteen acceptance checks, numbered 1..14. Each pins its own
/// parameters and tolerances.
CheckResult run_criterion(int index);

/// Named bundles of criteria for the CLI verify subcommand.
std::vector<std::string> suite_names();
std::vector<int> suite_criteria(const std::string& suite);

}  // namespace algas::verify
