#include "ordt/serial.hpp"

#include <map>
#include <string>

#include "ordt/dynamics.hpp"
#include "ordt/errors.hpp"
#include "ordt/rational.hpp"

namespace ordt::serial {

namespace {

Rat fraction(std::uint64_t a, std::uint64_t M) {
  return make_rat(Int(static_cast<unsigned long>(a)), Int(static_cast<unsigned long>(M)));
}

using Memo = std::map<std::pair<std::uint64_t, std::uint64_t>, ClassSet>;

const ClassSet& recursive(std::uint64_t n, std::uint64_t M, Memo& memo) {
  if (auto it = memo.find({n, M}); it != memo.end()) return it->second;
  ClassSet out{n, M, 1, {}};
  for (std::uint64_t i = 0; i <= n; ++i) out.modulus *= M;
  if (n == 1) {
    for (std::uint64_t k = 1; k < M; ++k)
      if (gcd(k, M) == 1) out.residues.push_back(k);
  } else {
    const std::uint64_t q_count = out.modulus / M;
    for (std::uint64_t q = 0; q < q_count; ++q) {
      const std::uint64_t h = gcd(q, M);
      const std::uint64_t N = M / h;
      if (N == 1) continue;
      const ClassSet& sub = recursive(n - 1, N, memo);
      for (std::uint64_t c = 1; c < M; ++c) {
        if (gcd(c, M) != 1) continue;
        const Int image = Int(static_cast<unsigned long>(q / h)) *
                          Int(static_cast<unsigned long>(M + c)) %
                          Int(static_cast<unsigned long>(sub.modulus));
        if (sub.contains(image.get_ui())) out.residues.push_back(q * M + c);
      }
    }
  }
  return memo.emplace(std::make_pair(n, M), std::move(out)).first->second;
}

}  // namespace

ClassSet enumerate_bruteforce(std::uint64_t n, std::uint64_t M, std::uint64_t cap,
                              std::uint64_t budget) {
  if (M < 2 || n < 1) throw DomainError("class sets need M >= 2 and n >= 1");
  if (cap <= n) throw DomainError("enumerate_bruteforce: cap must exceed n");
  const std::uint64_t modulus = class_modulus(n, M, budget);
  ClassSet out{n, M, modulus, {}};
  for (std::uint64_t k = 0; k < modulus; ++k) {
    if (gcd(k, M) != 1) continue;
    const std::uint64_t a = k >= 2 * M ? k : k + modulus;
    const OrderResult res = order(fraction(a, M), cap);
    if (!res.is_finite())
      throw CheckFailure("representative " + std::to_string(a) + "/" + std::to_string(M) +
                         " exceeded the cap");
    if (res.order() == n) out.residues.push_back(k);
  }
  return out;
}

ClassSet enumerate_recursive(std::uint64_t n, std::uint64_t M, std::uint64_t budget) {
  if (M < 2 || n < 1) throw DomainError("class sets need M >= 2 and n >= 1");
  class_modulus(n, M, budget);
  Memo memo;
  return recursive(n, M, memo);
}

EmpiricalCounts empirical_counts(std::uint64_t M, std::uint64_t n_max, std::uint64_t cap) {
  if (M < 2) throw DomainError("empirical density needs M >= 2");
  EmpiricalCounts out{M, n_max, cap, 0, 0, 0, 0, {}};
  for (std::uint64_t a = 1; a <= n_max; ++a) {
    if (gcd(a, M) != 1) continue;
    ++out.counted_b;
    if (a < 2 * M) continue;
    ++out.counted_admissible;
    const OrderResult res = order(fraction(a, M), cap);
    if (res.is_finite()) {
      ++out.counted_finite;
      ++out.per_order[res.order()];
    } else {
      ++out.cap_exceeded;
    }
  }
  return out;
}

std::vector<Exceeder> scan_block(std::uint64_t M, std::uint64_t lo, std::uint64_t hi,
                                 std::uint64_t cap) {
  std::vector<Exceeder> out;
  for (std::uint64_t a = lo; a <= hi && lo <= hi; ++a) {
    if (gcd(a, M) != 1) continue;
    const OrbitTrace trace = orbit(fraction(a, M), cap);
    if (!trace.result.is_finite())
      out.push_back({a, M, cap, trace.last().den().get_ui()});
  }
  return out;
}

}  // namespace ordt::serial
