#pragma once

// The verification harness: seeded random labelings across a range of
// rectangle sizes, run through every identity check, with the first failure
// of each check kept as a counterexample.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rowmotion/serialization.hpp"

namespace rowmotion {

/// Deliberate defects used to confirm that the checks can fail.
enum class Mutation {
  none,
  parallel_sum_as_sum,     // toggles use a + b in place of a ∥ b
  transposed_minor_index,  // closed forms read W_ji^(k) in place of W_ij^(k)
};

std::string to_string(Mutation mutation);
/// Throws DomainError on an unknown name.
Mutation mutation_from_string(const std::string& name);

struct SuiteConfig {
  int r_max = 3;
  int s_max = 3;
  int trials = 5;  // random labelings per rectangle size
  std::uint64_t seed = 1;
  long bound = 20;              // labels are p/q with 1 <= p, q <= bound
  std::set<std::string> suites;  // empty selects every suite
  Mutation mutation = Mutation::none;

  /// Throws DomainError on nonpositive bounds or unknown suite names.
  void validate() const;
  bool selected(const std::string& suite) const {
    return suites.empty() || suites.contains(suite);
  }
};

/// Suite names in execution order.
const std::vector<std::string>& suite_names();

struct CheckOutcome {
  std::string suite;
  std::string check;
  bool passed = true;
  long instances = 0;
  long skipped = 0;
  double seconds = 0;
  std::optional<Json> counterexample = std::nullopt;  // first failure, smallest size first
};

struct VerificationReport {
  SuiteConfig config;
  std::vector<CheckOutcome> checks;

  bool passed() const;
  /// Null when no check of that name ran.
  const CheckOutcome* find(const std::string& check) const;
  /// Per-check seconds are included only with `with_timing`.
  Json to_json(bool with_timing = false) const;
};

VerificationReport run_suite(const SuiteConfig& config);

/// Birational algebra, or its parallel-sum mutant.
ToggleAlgebra suite_algebra(Mutation mutation);

}  // namespace rowmotion
