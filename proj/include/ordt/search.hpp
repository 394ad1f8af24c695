#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ordt/arith.hpp"

namespace ordt {

// M + 1 + M^n (M - 1): a numerator congruent to 1 mod M whose fraction over M
// has order exactly n.
Int family_witness(std::uint64_t M, std::uint64_t n);

// mu(M, n): the least a >= 2M coprime to M with ord(a/M) = n.
struct MuEntry {
  std::uint64_t M = 0;
  std::uint64_t n = 0;
  Int mu;
  bool operator==(const MuEntry&) const = default;
};

struct MuSearchResult {
  std::uint64_t M = 0;
  std::uint64_t n = 0;
  Int limit;
  std::optional<MuEntry> entry;  // empty: nothing of order n up to limit
  // Numerators below the answer whose orbit was still open at the cap. They
  // cannot have order n (cap >= n), so they do not affect the answer.
  std::vector<Int> cap_incidents;
  bool operator==(const MuSearchResult&) const = default;
};

// Scans a = 2M, 2M + 1, ... up to `limit` (default: family_witness(M, n),
// where a hit is guaranteed). Throws DomainError unless M >= 2, n >= 1 and
// cap >= n.
MuSearchResult mu_search(std::uint64_t M, std::uint64_t n,
                         const std::optional<Int>& limit, std::uint64_t cap);

}  // namespace ordt
