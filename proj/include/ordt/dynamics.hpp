#pragma once

#include <cstdint>
#include <vector>

#include "ordt/arith.hpp"
#include "ordt/rational.hpp"

namespace ordt {

// Decomposition of one application of T(x) = floor(x) * (1 + frac(x)) to a
// non-integer x = a/M in lowest terms.
struct DescentStep {
  Int q;        // floor(a / M)
  Int r;        // a mod M, 1 <= r < M
  Int h;        // gcd(q, M)
  Int new_den;  // M / h, the reduced denominator of the image
  Rat image;
};

// Either the least n with T^n(x) an integer, or "not reached within cap
// iterations". CapExceeded never means the order is infinite.
class OrderResult {
 public:
  static OrderResult finite(std::uint64_t n) { return OrderResult(true, n); }
  static OrderResult cap_exceeded(std::uint64_t cap) { return OrderResult(false, cap); }

  bool is_finite() const { return finite_; }
  std::uint64_t order() const;  // throws std::logic_error unless finite
  std::uint64_t cap() const;    // throws std::logic_error if finite

  bool operator==(const OrderResult&) const = default;

 private:
  OrderResult(bool finite, std::uint64_t value) : finite_(finite), value_(value) {}
  bool finite_;
  std::uint64_t value_;
};

struct OrbitTrace {
  Rat start;
  std::vector<DescentStep> steps;
  OrderResult result = OrderResult::finite(0);

  // Value after the last recorded step (the start if there are no steps).
  const Rat& last() const { return steps.empty() ? start : steps.back().image; }
};

// T(x) for x >= 1. Throws DomainError for x < 1.
Rat t_step(const Rat& x);

// Throws DomainError unless x >= 1 and x is not an integer.
DescentStep descent_step(const Rat& x);

// Throws DomainError for x < 2.
OrderResult order(const Rat& x, std::uint64_t cap);
OrbitTrace orbit(const Rat& x, std::uint64_t cap);

// Order of a/M without materialising a trace or checking the domain; the
// caller guarantees a/M >= 2. Used by the scanning kernels.
OrderResult order_of(const Int& a, const Int& M, std::uint64_t cap);

// Same as order_of but also reports the denominator reached when the cap is
// hit (equal to 1 for finite orders).
OrderResult order_of(const Int& a, const Int& M, std::uint64_t cap, Int& last_den);

// Closed form for denominator 2: ord(a/2) = v_2(a - 3). Requires a odd, a >= 5.
std::uint64_t order_half(const Int& a);

}  // namespace ordt
