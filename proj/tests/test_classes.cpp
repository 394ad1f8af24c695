#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "ordt/classes.hpp"
#include "ordt/dynamics.hpp"
#include "ordt/errors.hpp"

using namespace ordt;
using Residues = std::vector<std::uint64_t>;

TEST_CASE("count_recurrence examples") {
  CHECK(count_recurrence(1, 6) == 2);
  CHECK(count_recurrence(2, 3) == 4);
  CHECK(count_recurrence(2, 6) == 18);
  CHECK(count_recurrence(0, 1) == 1);
  CHECK(count_recurrence(0, 5) == 0);
  CHECK(count_recurrence(3, 1) == 0);
}

TEST_CASE("count_prime_power examples") {
  CHECK(count_prime_power(3, 2, 1) == 1);
  CHECK(count_prime_power(2, 2, 2) == 8);
  CHECK(count_prime_power(1, 5, 1) == 4);
  CHECK(count_prime_power(2, 2, 2) == count_recurrence(2, 4));
  CHECK_THROWS_AS(count_prime_power(2, 4, 1), DomainError);
  CHECK_THROWS_AS(count_prime_power(0, 2, 1), DomainError);
}

TEST_CASE("recurrence matches the prime-power formula") {
  CountTable table;
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    std::uint64_t ps = 1;
    for (unsigned s = 1; s <= 4; ++s) {
      ps *= p;
      for (std::uint64_t n = 1; n <= 8; ++n) REQUIRE(table.get(n, ps) == count_prime_power(n, p, s));
    }
  }
}

TEST_CASE("A(1,M) = phi(M)") {
  CountTable table;
  for (std::uint64_t M = 2; M <= 1000; ++M) REQUIRE(table.get(1, M) == totient(M));
}

TEST_CASE("A(n,M) >= phi(M)^n, so no class set is empty") {
  CountTable table;
  for (std::uint64_t M = 2; M <= 40; ++M)
    for (unsigned long n = 1; n <= 6; ++n)
      REQUIRE(table.get(n, M) >= pow(Int(static_cast<unsigned long>(totient(M))), n));
}

TEST_CASE("CountTable pins planted entries") {
  CountTable table;
  table.set(2, 3, 5);
  CHECK(table.get(2, 3) == 5);
  CHECK(table.get(1, 3) == 2);
}

TEST_CASE("enumerate_bruteforce examples") {
  auto s = enumerate_bruteforce(1, 4, 10);
  CHECK(s.modulus == 16);
  CHECK(s.residues == Residues{1, 3});
  CHECK(enumerate_bruteforce(2, 2, 10).residues == Residues{7});
  s = enumerate_bruteforce(2, 3, 10);
  CHECK(s.modulus == 27);
  CHECK(s.residues == Residues{8, 14, 16, 22});
}

TEST_CASE("enumerate_recursive examples") {
  CHECK(enumerate_recursive(1, 4).residues == Residues{1, 3});
  CHECK(enumerate_recursive(2, 3).residues == Residues{8, 14, 16, 22});
  const auto s = enumerate_recursive(3, 2);
  CHECK(s.modulus == 16);
  CHECK(s.residues == Residues{11});
}

TEST_CASE("enumeration errors") {
  CHECK_THROWS_AS(enumerate_bruteforce(2, 3, 2), DomainError);
  CHECK_THROWS_AS(enumerate_bruteforce(1, 1, 10), DomainError);
  CHECK_THROWS_AS(enumerate_recursive(0, 3), DomainError);
  CHECK_THROWS_AS(enumerate_recursive(6, 10, {1'000'000, 0}), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_bruteforce(20, 10, 100), BudgetExceeded);
  // some representative mod 5^3 has order above 3
  CHECK_THROWS_AS(enumerate_bruteforce(2, 5, 3), CheckFailure);
}

TEST_CASE("both enumerations match the definitional oracle") {
  for (std::uint64_t M = 2; M <= 7; ++M)
    for (std::uint64_t n = 1; n <= 3; ++n) {
      std::uint64_t modulus = 0;
      if (!checked_pow(M, static_cast<unsigned>(n + 1), 3000, modulus)) continue;
      const auto expected = oracle::classes(n, M);
      REQUIRE(enumerate_bruteforce(n, M, 200).residues == expected);
      REQUIRE(enumerate_recursive(n, M).residues == expected);
    }
}

TEST_CASE("brute force and recursion agree, and match A(n,M)") {
  for (std::uint64_t M = 2; M <= 10; ++M)
    for (std::uint64_t n = 1; n <= 4; ++n) {
      std::uint64_t modulus = 0;
      if (!checked_pow(M, static_cast<unsigned>(n + 1), 20'000, modulus)) break;
      const auto brute = enumerate_bruteforce(n, M, 1000);
      const auto rec = enumerate_recursive(n, M);
      REQUIRE(brute == rec);
      REQUIRE(Int(static_cast<unsigned long>(rec.residues.size())) == count_recurrence(n, M));
      for (auto k : rec.residues) {
        REQUIRE(k < rec.modulus);
        REQUIRE(std::gcd(k, M) == 1);
      }
      REQUIRE(std::is_sorted(rec.residues.begin(), rec.residues.end()));
      REQUIRE(std::adjacent_find(rec.residues.begin(), rec.residues.end()) == rec.residues.end());
    }
}

TEST_CASE("class invariance over several representatives") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint64_t M = rng() % 7 + 2;
    const std::uint64_t n = rng() % 3 + 1;
    const auto set = enumerate_recursive(n, M);
    const std::uint64_t k = set.residues[rng() % set.residues.size()];
    std::uint64_t a = k;
    while (a < 2 * M) a += set.modulus;
    for (int i = 0; i < 5; ++i) {
      const std::uint64_t rep = a + set.modulus * (rng() % 1000);
      REQUIRE(order_of(Int(static_cast<unsigned long>(rep)), Int(static_cast<unsigned long>(M)), 1000) ==
              OrderResult::finite(n));
    }
  }
}

TEST_CASE("classify") {
  CHECK(classify(Int(22), 3, 2));
  CHECK_FALSE(classify(Int(7), 3, 2));
  CHECK(classify(Int(5), 2, 1));
  CHECK(classify(Int(7), 3, 3));
  CHECK_THROWS_AS(classify(Int(9), 3, 2), DomainError);
  CHECK_THROWS_AS(classify(Int(5), 3, 2), DomainError);
}

TEST_CASE("classify agrees with order") {
  for (unsigned long M = 2; M <= 6; ++M)
    for (unsigned long a = 2 * M; a < 2 * M + 300; ++a) {
      if (std::gcd(a, M) != 1) continue;
      const auto ord = order_of(Int(a), Int(M), 1000);
      REQUIRE(ord.is_finite());
      for (std::uint64_t n = 1; n <= 3; ++n)
        REQUIRE(classify(Int(a), M, n) == (ord.order() == n));
    }
}

TEST_CASE("multiplication by a unit permutes the units mod N^n") {
  for (std::uint64_t N : {2u, 3u, 4u, 6u, 10u})
    for (unsigned n = 1; n <= 3; ++n) {
      std::uint64_t mod = 1;
      for (unsigned i = 0; i < n; ++i) mod *= N;
      for (std::uint64_t u = 1; u < mod; ++u) {
        if (std::gcd(u, N) != 1) continue;
        std::vector<char> seen(mod, 0);
        for (std::uint64_t k = 0; k < mod; ++k) {
          if (std::gcd(k, N) != 1) continue;
          const auto image = u * k % mod;
          REQUIRE(std::gcd(image, N) == 1);
          REQUIRE_FALSE(seen[image]);
          seen[image] = 1;
        }
      }
    }
}
