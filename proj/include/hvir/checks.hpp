#pragma once

#include <string>
#include <vector>

namespace hvir {

/// Outcome of one acceptance criterion.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Number of acceptance criteria (ids 1..kCheckCount).
inline constexpr int kCheckCount = 11;

/// Runs criterion `id`; any exception thrown inside becomes a failure with
/// the message in `detail`. Throws std::out_of_range for an unknown id.
CheckResult run_check(int id);

/// "all", "algebra", "operators", "ward", "geometry", "expansion".
const std::vector<std::string>& suite_names();

/// Criterion ids of a suite; throws std::invalid_argument for an unknown name.
std::vector<int> suite_members(const std::string& suite);

/// Runs every criterion of the suite in id order.
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace hvir
