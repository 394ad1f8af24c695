#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ordt/arith.hpp"
#include "ordt/rational.hpp"

namespace ordt {

struct DensityTerm {
  std::uint64_t n = 0;
  Int count;  // A(n, M)
  Int phi;    // phi(M^{n+1}) = M^n * phi(M)
  Rat term;   // count / phi
};

// Exhaustive tallies over numerators a <= N_max for one denominator.
struct EmpiricalCounts {
  std::uint64_t M = 0;
  std::uint64_t n_max = 0;
  std::uint64_t cap = 0;
  std::uint64_t counted_b = 0;           // #{1 <= a <= N_max : gcd(a, M) = 1}
  std::uint64_t counted_admissible = 0;  // those with a >= 2M
  std::uint64_t counted_finite = 0;      // admissible with order <= cap
  std::uint64_t cap_exceeded = 0;        // admissible, unresolved at cap
  std::map<std::uint64_t, std::uint64_t> per_order;

  // Associative and commutative; partial tallies over disjoint ranges merge
  // into the tally over their union.
  void merge(const EmpiricalCounts& other);
  std::uint64_t observed(std::uint64_t n) const;
  bool operator==(const EmpiricalCounts&) const = default;
};

struct DensityReport {
  std::uint64_t M = 0;
  std::vector<DensityTerm> terms;  // n = 0, 1, ..., N
  Rat partial_sum;
  std::optional<EmpiricalCounts> empirical;
};

// A(n, M) / phi(M^{n+1}), the relative density of order-n numerators.
Rat term(std::uint64_t M, std::uint64_t n);

// Sum of term(M, n) for n = 0..N, exact.
Rat partial_sum(std::uint64_t M, std::uint64_t N);

std::vector<DensityTerm> density_terms(std::uint64_t M, std::uint64_t N);

// Bounds on #(S_n cap [1,N]) / #(B_M cap [1,N]) from counting whole blocks of
// M^{n+1} and of M consecutive integers, clamped to [0, 1].
struct SandwichBounds {
  Rat lower;
  Rat upper;
};
SandwichBounds sandwich_bounds(std::uint64_t M, std::uint64_t n, std::uint64_t N);

// Exhaustive count over [1, N_max]; OpenMP-parallel over blocks.
EmpiricalCounts empirical_counts(std::uint64_t M, std::uint64_t n_max,
                                 std::uint64_t cap, int threads = 0);

// Terms and partial sum for n = 0..cap together with the empirical counts.
DensityReport empirical_density(std::uint64_t M, std::uint64_t n_max,
                                std::uint64_t cap, int threads = 0);

DensityReport density_report(std::uint64_t M, std::uint64_t terms);

}  // namespace ordt
