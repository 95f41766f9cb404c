#pragma once

#include <string>
#include <vector>

namespace hyperfact {

struct CheckResult {
  std::string name;   // stable check id, e.g. "cardinality-parity"
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace hyperfact
