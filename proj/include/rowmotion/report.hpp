#pragma once

#include <string>
#include <vector>

namespace rowmotion {

struct Violation {
  std::string where;   // coordinates of the failing instance
  std::string detail;  // expected vs. actual, or the error text
};

/// Outcome of an exhaustive identity check over some index range.
struct CheckReport {
  std::string name;
  long checked = 0;  // instances where both sides were defined and compared
  long skipped = 0;  // instances outside the identity's domain
  std::vector<Violation> violations = {};

  bool ok() const { return violations.empty(); }
  void record(bool holds, std::string where, std::string detail) {
    ++checked;
    if (!holds) violations.push_back({std::move(where), std::move(detail)});
  }
  void merge(const CheckReport& other) {
    checked += other.checked;
    skipped += other.skipped;
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
};

}  // namespace rowmotion
