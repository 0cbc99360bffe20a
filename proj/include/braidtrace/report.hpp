#pragma once

#include <optional>
#include <string>
#include <vector>

namespace braidtrace {

/// One verified identity: lhs and rhs are canonical value texts so a failing
/// check can be inspected without rerunning.
struct CheckResult {
  std::string name;
  int n = 0;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string title;
  std::vector<CheckResult> checks;
  std::optional<int> epsilon;        // exponent sign fixed by calibration
  std::optional<char> mirror_branch; // 'A' or 'B'

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace braidtrace
