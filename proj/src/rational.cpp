#include "ordt/rational.hpp"

#include <cassert>
#include <sstream>

#include "ordt/errors.hpp"

namespace ordt {

Rat::Rat(const Int& integer) : num_(integer), den_(1) {
  if (num_ < 0) throw DomainError("negative rationals are not supported");
}

Rat::Rat(const Int& num, const Int& den) : num_(num), den_(den) {
  if (den_ == 0) throw DomainError("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ < 0) throw DomainError("negative rationals are not supported");
  Int g = gcd(num_, den_);
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  assert(den_ >= 1 && gcd(num_, den_) == 1);
}

Int Rat::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

std::string Rat::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

std::string Rat::to_decimal(int digits) const {
  mpf_class f(0, 256);
  f = mpf_class(num_, 256) / mpf_class(den_, 256);
  std::ostringstream os;
  os.precision(digits);
  os << f;
  return os.str();
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.num_, a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rat make_rat(const Int& num, const Int& den) { return Rat(num, den); }

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.to_string();
}

}  // namespace ordt
