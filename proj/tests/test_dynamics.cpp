#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "ordt/dynamics.hpp"
#include "ordt/errors.hpp"

using namespace ordt;

namespace {

Rat q(long a, long b) { return make_rat(Int(a), Int(b)); }

}  // namespace

TEST_CASE("t_step examples") {
  CHECK(t_step(q(7, 3)) == q(8, 3));
  CHECK(t_step(q(5, 2)) == q(3, 1));
  CHECK(t_step(q(3, 2)) == q(3, 2));
  CHECK(t_step(q(13, 6)) == q(7, 3));
  CHECK(t_step(q(5, 1)) == q(5, 1));
  CHECK_THROWS_AS(t_step(q(1, 2)), DomainError);
}

TEST_CASE("descent_step examples") {
  auto s = descent_step(q(13, 6));
  CHECK(s.q == 2);
  CHECK(s.r == 1);
  CHECK(s.h == 2);
  CHECK(s.new_den == 3);
  CHECK(s.image == q(7, 3));

  s = descent_step(q(7, 3));
  CHECK((s.q == 2 && s.r == 1 && s.h == 1 && s.new_den == 3));
  CHECK(s.image == q(8, 3));

  s = descent_step(q(9, 2));
  CHECK((s.q == 4 && s.r == 1 && s.h == 2 && s.new_den == 1));
  CHECK(s.image == q(6, 1));

  CHECK_THROWS_AS(descent_step(q(4, 1)), DomainError);
}

TEST_CASE("order examples") {
  CHECK(order(q(4, 1), 100) == OrderResult::finite(0));
  CHECK(order(q(7, 3), 100) == OrderResult::finite(3));
  CHECK(order(q(11, 2), 100) == OrderResult::finite(3));
  CHECK(order(q(5, 2), 100) == OrderResult::finite(1));
  CHECK(order(q(17, 3), 2) == OrderResult::cap_exceeded(2));
  CHECK(order(q(17, 3), 100) == OrderResult::finite(7));
  // order is a property of the number, not its representation
  CHECK(order(q(14, 6), 100) == order(q(7, 3), 100));
  CHECK(order_of(Int(8), Int(2), 10) == OrderResult::finite(0));
}

TEST_CASE("order rejects x < 2") {
  CHECK_THROWS_AS(order(q(3, 2), 100), DomainError);
  CHECK_THROWS_AS(order(q(1, 1), 100), DomainError);
  CHECK_THROWS_AS(orbit(q(7, 4), 100), DomainError);
}

TEST_CASE("OrderResult accessors") {
  CHECK(OrderResult::finite(3).order() == 3);
  CHECK_THROWS_AS(OrderResult::finite(3).cap(), std::logic_error);
  CHECK_THROWS_AS(OrderResult::cap_exceeded(3).order(), std::logic_error);
  CHECK(OrderResult::finite(3) != OrderResult::cap_exceeded(3));
}

TEST_CASE("orbit examples") {
  auto t = orbit(q(7, 3), 10);
  REQUIRE(t.steps.size() == 3);
  CHECK(t.steps[0].image == q(8, 3));
  CHECK(t.steps[1].image == q(10, 3));
  CHECK(t.steps[2].image == q(4, 1));
  CHECK(t.result == OrderResult::finite(3));

  t = orbit(q(6, 1), 10);
  CHECK(t.steps.empty());
  CHECK(t.result == OrderResult::finite(0));

  t = orbit(q(17, 3), 2);
  REQUIRE(t.steps.size() == 2);
  CHECK(t.steps[0].image == q(25, 3));
  CHECK(t.steps[1].image == q(32, 3));
  CHECK(t.result == OrderResult::cap_exceeded(2));
}

TEST_CASE("order_half") {
  CHECK(order_half(Int(5)) == 1);
  CHECK(order_half(Int(11)) == 3);
  CHECK(order_half(Int(7)) == 2);
  CHECK_THROWS_AS(order_half(Int(6)), DomainError);
  CHECK_THROWS_AS(order_half(Int(3)), DomainError);
}

TEST_CASE("order_half agrees with the generic order") {
  for (unsigned long a = 5; a <= (1ul << 16); a += 2)
    REQUIRE(order(make_rat(Int(a), Int(2)), 64) == OrderResult::finite(order_half(Int(a))));
}

TEST_CASE("order agrees with the mpq oracle") {
  for (unsigned long M = 2; M <= 12; ++M)
    for (unsigned long a = 2 * M; a < 2 * M + 400; ++a) {
      const auto expected = oracle::order(a, M, 300);
      const auto got = order(make_rat(Int(a), Int(M)), 300);
      if (expected)
        REQUIRE(got == OrderResult::finite(*expected));
      else
        REQUIRE(got == OrderResult::cap_exceeded(300));
    }
}

TEST_CASE("fixed interval [1,2)") {
  for (long M = 2; M <= 30; ++M)
    for (long a = M; a < 2 * M; ++a) REQUIRE(t_step(q(a, M)) == q(a, M));
}

TEST_CASE("monotone growth and numerator bound") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const long M = static_cast<long>(rng() % 200 + 2);
    const long a = static_cast<long>(rng() % 1'000'000) + 2 * M;
    const Rat x = q(a, M);
    if (x.is_integer()) continue;
    const Rat y = t_step(x);
    REQUIRE(y > x);
    REQUIRE(y.num() < 2 * x.num());
  }
}

TEST_CASE("denominator descent matches M / gcd(floor(a/M), M)") {
  for (unsigned long M = 2; M <= 50; ++M)
    for (unsigned long a = M; a <= 5000; ++a) {
      if (std::gcd(a, M) != 1) continue;
      const Rat y = t_step(make_rat(Int(a), Int(M)));
      REQUIRE(y.den() == Int(M / std::gcd(a / M, M)));
    }
}

TEST_CASE("orbit traces are increasing with non-increasing denominators") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const long M = static_cast<long>(rng() % 60 + 2);
    const long a = static_cast<long>(rng() % 100000) + 2 * M;
    const std::uint64_t cap = rng() % 8 + 1;  // small caps produce CapExceeded traces
    const auto t = orbit(q(a, M), cap);
    Rat prev = t.start;
    for (const auto& s : t.steps) {
      REQUIRE(s.image > prev);
      REQUIRE(s.new_den <= prev.den());
      REQUIRE(prev.den() % s.new_den == 0);
      REQUIRE(s.image.den() == s.new_den);
      prev = s.image;
    }
    REQUIRE(t.result == order(t.start, cap));
    if (!t.result.is_finite()) {
      REQUIRE(t.steps.size() == cap);
      REQUIRE(t.last().den() > 1);
      REQUIRE(Int(M) % t.last().den() == 0);
    }
  }
}
