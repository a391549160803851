#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace heisrat {

/// One named, machine-checked claim.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

}  // namespace heisrat
