#pragma once

// Test-only reference dynamics on mpq_class. Shares no code with the library's
// Rat or order routines.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline mpz_class floor_of(const mpq_class& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

inline mpq_class step(const mpq_class& x) {
  const mpz_class f = floor_of(x);
  mpq_class frac = x - mpq_class(f);
  mpq_class out = mpq_class(f) * (1 + frac);
  out.canonicalize();
  return out;
}

inline std::optional<std::uint64_t> order(mpq_class x, std::uint64_t cap) {
  x.canonicalize();
  for (std::uint64_t n = 0; n <= cap; ++n) {
    if (x.get_den() == 1) return n;
    x = step(x);
  }
  return std::nullopt;
}

inline std::optional<std::uint64_t> order(std::uint64_t a, std::uint64_t M, std::uint64_t cap) {
  return order(mpq_class(mpz_class(static_cast<unsigned long>(a)),
                         mpz_class(static_cast<unsigned long>(M))),
               cap);
}

// Brute-force definition of R_{n,M}: residues all of whose first few class
// members a >= 2M have order n.
inline std::vector<std::uint64_t> classes(std::uint64_t n, std::uint64_t M, int members = 3) {
  std::uint64_t modulus = 1;
  for (std::uint64_t i = 0; i <= n; ++i) modulus *= M;
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 0; k < modulus; ++k) {
    if (std::gcd(k, M) != 1) continue;
    bool all = true;
    std::uint64_t a = k;
    while (a < 2 * M) a += modulus;
    for (int i = 0; i < members && all; ++i, a += modulus) all = order(a, M, 200) == n;
    if (all) out.push_back(k);
  }
  return out;
}

}  // namespace oracle
