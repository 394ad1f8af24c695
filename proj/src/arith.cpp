#include "ordt/arith.hpp"

#include <algorithm>
#include <numeric>

#include "ordt/errors.hpp"

namespace ordt {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::vector<PrimePower> factorize(std::uint64_t m) {
  if (m == 0) throw DomainError("cannot factor 0");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  auto f = factorize(m);
  return f.size() == 1 && f.front().exponent == 1;
}

std::uint64_t totient(std::uint64_t m) {
  if (m == 0) throw DomainError("totient: argument must be >= 1");
  std::uint64_t phi = m;
  for (const auto& [p, e] : factorize(m)) phi = phi / p * (p - 1);
  return phi;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  if (m == 0) throw DomainError("divisors: argument must be >= 1");
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(m)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned valuation(std::uint64_t p, const Int& m) {
  if (!is_prime(p)) throw DomainError("valuation: p must be prime");
  if (m == 0) throw DomainError("valuation: v_p(0) is infinite");
  Int rest = abs(m);
  Int prime(static_cast<unsigned long>(p));
  return static_cast<unsigned>(
      mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t()));
}

bool checked_pow(std::uint64_t base, unsigned exp, std::uint64_t limit,
                 std::uint64_t& out) {
  out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > limit / base) return false;
    out *= base;
  }
  return out <= limit;
}

Int pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int parse_int(const std::string& text) {
  Int v;
  if (text.empty() || v.set_str(text, 10) != 0)
    throw DomainError("not a decimal integer: '" + text + "'");
  return v;
}

}  // namespace ordt
