#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ordt/arith.hpp"

namespace ordt {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// R_{n,M}: residues k mod M^{n+1}, coprime to M, such that every numerator
// a >= 2M with a = k (mod M^{n+1}) has order exactly n.
struct ClassSet {
  std::uint64_t n = 0;
  std::uint64_t M = 0;
  std::uint64_t modulus = 0;  // M^{n+1}
  std::vector<std::uint64_t> residues;  // strictly ascending

  bool contains(std::uint64_t k) const;
  bool operator==(const ClassSet&) const = default;
};

// Memoized A(n, M) with the degenerate conventions A(0,1) = 1,
// A(0,M) = 0 for M > 1 and A(n,1) = 0 for n >= 1. Not thread-safe; give
// each thread its own table.
class CountTable {
 public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;  // (n, M)

  const Int& get(std::uint64_t n, std::uint64_t M);

  // Pins an entry, bypassing the recurrence. Later lookups that depend on it
  // use the pinned value.
  void set(std::uint64_t n, std::uint64_t M, const Int& value);

  const std::map<Key, Int>& entries() const { return entries_; }

 private:
  std::map<Key, Int> entries_;
};

Int count_recurrence(std::uint64_t n, std::uint64_t M);

// C(n+s-2, s-1) * phi(p^s)^n. Throws DomainError if p is not prime or
// n, s < 1.
Int count_prime_power(std::uint64_t n, std::uint64_t p, unsigned s);

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;  // maximum modulus M^{n+1}
  int threads = 0;                        // 0: OpenMP default
};

// M^{n+1}, or BudgetExceeded if it exceeds `budget`.
std::uint64_t class_modulus(std::uint64_t n, std::uint64_t M, std::uint64_t budget);

// Runs the dynamics on the smallest representative a >= 2M of every coprime
// residue. Throws DomainError if cap <= n, BudgetExceeded over budget, and
// CheckFailure if any representative exceeds the cap.
ClassSet enumerate_bruteforce(std::uint64_t n, std::uint64_t M, std::uint64_t cap,
                              const EnumerationOptions& opts = {});

// Builds R_{n,M} from R_{n-1,N} for the divisors N of M by following one
// descent step per residue; never iterates the map more than once.
ClassSet enumerate_recursive(std::uint64_t n, std::uint64_t M,
                             const EnumerationOptions& opts = {});

// a mod M^{n+1} in R_{n,M}. Requires gcd(a, M) = 1 and a >= 2M.
bool classify(const Int& a, std::uint64_t M, std::uint64_t n,
              const EnumerationOptions& opts = {});

}  // namespace ordt
