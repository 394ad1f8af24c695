#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordt/arith.hpp"

namespace ordt {

struct ClassEqualityCheck {
  std::uint64_t m_lo = 2, m_hi = 10;
  std::uint64_t n_lo = 1, n_hi = 4;
  std::uint64_t max_modulus = 200'000;
  std::uint64_t cap = 1000;
};

struct PlantedCount {
  std::uint64_t n = 0;
  std::uint64_t M = 0;
  Int value;
};

struct RecurrenceCheck {
  std::vector<std::uint64_t> primes{2, 3, 5, 7};
  unsigned s_max = 4;
  std::uint64_t n_max = 8;
  // Overrides in the count table, for exercising the failure path.
  std::vector<PlantedCount> planted;
};

struct FirstOrderCheck {
  std::uint64_t m_max = 1000;
};

struct HalfCheck {
  std::uint64_t a_max = 1u << 16;
  std::uint64_t cap = 64;
};

struct FamilyCheck {
  std::uint64_t m_max = 50;
  std::uint64_t n_max = 10;
};

struct PartialSumCheck {
  std::uint64_t n_max = 30;
};

// Absent members are skipped.
struct VerifyConfig {
  std::optional<ClassEqualityCheck> class_equality;
  std::optional<RecurrenceCheck> recurrence;
  std::optional<FirstOrderCheck> first_order;
  std::optional<HalfCheck> half;
  std::optional<FamilyCheck> family;
  std::optional<PartialSumCheck> partial_sums;
  int threads = 0;

  static VerifyConfig defaults();
};

struct CheckOutcome {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::vector<std::string> counterexamples;  // first few failing cases
  bool operator==(const CheckOutcome&) const = default;
};

struct VerifyReport {
  std::vector<CheckOutcome> checks;
  bool all_passed() const;
  bool operator==(const VerifyReport&) const = default;
};

// Failures are recorded in the report, never thrown.
VerifyReport verify_all(const VerifyConfig& config);

}  // namespace ordt
