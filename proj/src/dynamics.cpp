#include "ordt/dynamics.hpp"

#include <stdexcept>

#include "ordt/errors.hpp"

namespace ordt {

std::uint64_t OrderResult::order() const {
  if (!finite_) throw std::logic_error("order requested from CapExceeded result");
  return value_;
}

std::uint64_t OrderResult::cap() const {
  if (finite_) throw std::logic_error("cap requested from Finite result");
  return value_;
}

namespace {

const Rat kOne(Int(1));
const Rat kTwo(Int(2));

void require_at_least_two(const Rat& x) {
  if (x < kTwo)
    throw DomainError("order is defined for x >= 2 only (got " + x.to_string() + ")");
}

// One step on a reduced pair (num, den) in place, using the generic
// q(M + r)/M image followed by a full gcd reduction. Returns false if the
// input was already an integer.
bool advance(Int& num, Int& den, Int& q, Int& r, Int& g) {
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r == 0) return false;
  r += den;
  mpz_mul(num.get_mpz_t(), q.get_mpz_t(), r.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
  return true;
}

}  // namespace

Rat t_step(const Rat& x) {
  if (x < kOne) throw DomainError("T is applied to x >= 1 only (got " + x.to_string() + ")");
  if (x.is_integer()) return x;
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return make_rat(q * (x.den() + r), x.den());
}

DescentStep descent_step(const Rat& x) {
  if (x < kOne) throw DomainError("T is applied to x >= 1 only (got " + x.to_string() + ")");
  if (x.is_integer()) throw DomainError("descent_step needs a non-integer (got " + x.to_string() + ")");
  DescentStep s;
  mpz_fdiv_qr(s.q.get_mpz_t(), s.r.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  s.h = gcd(s.q, x.den());
  s.new_den = x.den() / s.h;
  s.image = t_step(x);
  return s;
}

OrderResult order_of(const Int& a, const Int& M, std::uint64_t cap, Int& last_den) {
  Int num = a, den = M, q, r, g;
  for (std::uint64_t n = 0;; ++n) {
    if (den == 1) {
      last_den = den;
      return OrderResult::finite(n);
    }
    if (n == cap) break;
    if (!advance(num, den, q, r, g)) {  // unreduced integer input
      last_den = 1;
      return OrderResult::finite(n);
    }
  }
  last_den = den;
  return OrderResult::cap_exceeded(cap);
}

OrderResult order_of(const Int& a, const Int& M, std::uint64_t cap) {
  Int last_den;
  return order_of(a, M, cap, last_den);
}

OrderResult order(const Rat& x, std::uint64_t cap) {
  require_at_least_two(x);
  return order_of(x.num(), x.den(), cap);
}

OrbitTrace orbit(const Rat& x, std::uint64_t cap) {
  require_at_least_two(x);
  OrbitTrace trace{x, {}, OrderResult::finite(0)};
  for (std::uint64_t n = 0;; ++n) {
    const Rat& cur = trace.last();
    if (cur.is_integer()) {
      trace.result = OrderResult::finite(n);
      return trace;
    }
    if (n == cap) break;
    trace.steps.push_back(descent_step(cur));
  }
  trace.result = OrderResult::cap_exceeded(cap);
  return trace;
}

std::uint64_t order_half(const Int& a) {
  if (a < 5 || mpz_even_p(a.get_mpz_t()))
    throw DomainError("order_half needs an odd numerator a >= 5");
  return valuation(2, a - 3);
}

}  // namespace ordt
