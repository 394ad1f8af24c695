#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ordt {

using Int = mpz_class;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

// gcd(0, b) = |b|.
Int gcd(const Int& a, const Int& b);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Trial division; fine for the moduli this library deals with.
std::vector<PrimePower> factorize(std::uint64_t m);

bool is_prime(std::uint64_t m);

// Euler's phi. Throws DomainError for m == 0.
std::uint64_t totient(std::uint64_t m);

// Positive divisors in ascending order. Throws DomainError for m == 0.
std::vector<std::uint64_t> divisors(std::uint64_t m);

// Largest e with p^e | m. Throws DomainError for m == 0 or p not prime.
unsigned valuation(std::uint64_t p, const Int& m);

// Stores base^exp in `out`; returns false (and leaves `out` unspecified) if
// the power exceeds `limit`.
bool checked_pow(std::uint64_t base, unsigned exp, std::uint64_t limit,
                 std::uint64_t& out);

Int pow(const Int& base, unsigned long exp);

// Parses a non-negative or signed decimal integer. Throws DomainError.
Int parse_int(const std::string& text);

}  // namespace ordt
