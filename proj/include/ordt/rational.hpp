#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "ordt/arith.hpp"

namespace ordt {

// Non-negative rational number, always stored in lowest terms with a positive
// denominator.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  explicit Rat(const Int& integer);
  Rat(const Int& num, const Int& den);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  Int floor() const;

  std::string to_string() const;
  // Decimal rendering with `digits` significant digits; display only.
  std::string to_decimal(int digits = 12) const;

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);  // throws if negative
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  Int num_;
  Int den_;
};

// Reduced num/den. Throws DomainError when den == 0 or the value is negative.
Rat make_rat(const Int& num, const Int& den);

// Parses "a/b" or "a".
Rat parse_rat(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace ordt
