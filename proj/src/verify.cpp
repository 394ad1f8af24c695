#include "ordt/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>

#include "ordt/classes.hpp"
#include "ordt/density.hpp"
#include "ordt/dynamics.hpp"
#include "ordt/rational.hpp"
#include "ordt/search.hpp"

namespace ordt {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

class Recorder {
 public:
  explicit Recorder(std::string name) { outcome_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++outcome_.cases;
    if (ok) return;
    outcome_.passed = false;
    if (outcome_.counterexamples.size() < kMaxCounterexamples)
      outcome_.counterexamples.push_back(describe());
  }

  void error(const std::string& what) {
    outcome_.passed = false;
    outcome_.counterexamples.push_back("exception: " + what);
  }

  CheckOutcome take() { return std::move(outcome_); }

 private:
  CheckOutcome outcome_;
};

template <typename Body>
CheckOutcome run_check(const std::string& name, Body&& body) {
  Recorder rec(name);
  try {
    body(rec);
  } catch (const std::exception& e) {
    rec.error(e.what());
  }
  return rec.take();
}

std::string set_diff(const ClassSet& a, const ClassSet& b) {
  std::vector<std::uint64_t> only_a, only_b;
  std::set_difference(a.residues.begin(), a.residues.end(), b.residues.begin(),
                      b.residues.end(), std::back_inserter(only_a));
  std::set_difference(b.residues.begin(), b.residues.end(), a.residues.begin(),
                      a.residues.end(), std::back_inserter(only_b));
  std::ostringstream os;
  os << "n=" << a.n << " M=" << a.M << " brute-only=" << only_a.size()
     << " recursive-only=" << only_b.size();
  if (!only_a.empty()) os << " first brute-only k=" << only_a.front();
  if (!only_b.empty()) os << " first recursive-only k=" << only_b.front();
  return os.str();
}

CheckOutcome check_class_equality(const ClassEqualityCheck& c, int threads) {
  return run_check("class_sets_brute_vs_recursive", [&](Recorder& rec) {
    EnumerationOptions opts{c.max_modulus, threads};
    for (std::uint64_t M = c.m_lo; M <= c.m_hi; ++M) {
      for (std::uint64_t n = c.n_lo; n <= c.n_hi; ++n) {
        std::uint64_t modulus = 0;
        if (!checked_pow(M, static_cast<unsigned>(n + 1), c.max_modulus, modulus)) break;
        const ClassSet brute = enumerate_bruteforce(n, M, c.cap, opts);
        const ClassSet rec_set = enumerate_recursive(n, M, opts);
        rec.expect(brute == rec_set, [&] { return set_diff(brute, rec_set); });
        const Int expected = count_recurrence(n, M);
        rec.expect(Int(static_cast<unsigned long>(rec_set.residues.size())) == expected, [&] {
          std::ostringstream os;
          os << "n=" << n << " M=" << M << " |R|=" << rec_set.residues.size()
             << " A=" << expected.get_str();
          return os.str();
        });
      }
    }
  });
}

CheckOutcome check_recurrence(const RecurrenceCheck& c) {
  return run_check("recurrence_vs_prime_power_formula", [&](Recorder& rec) {
    CountTable table;
    for (const auto& p : c.planted) table.set(p.n, p.M, p.value);
    for (std::uint64_t p : c.primes) {
      std::uint64_t ps = 1;
      for (unsigned s = 1; s <= c.s_max; ++s) {
        ps *= p;
        for (std::uint64_t n = 1; n <= c.n_max; ++n) {
          const Int lhs = table.get(n, ps);
          const Int rhs = count_prime_power(n, p, s);
          rec.expect(lhs == rhs, [&] {
            return "n=" + std::to_string(n) + " M=" + std::to_string(ps) +
                   " recurrence=" + lhs.get_str() + " closed_form=" + rhs.get_str();
          });
        }
      }
    }
  });
}

CheckOutcome check_first_order(const FirstOrderCheck& c) {
  return run_check("first_order_count_is_totient", [&](Recorder& rec) {
    CountTable table;
    for (std::uint64_t M = 2; M <= c.m_max; ++M) {
      const Int a = table.get(1, M);
      const Int phi(static_cast<unsigned long>(totient(M)));
      rec.expect(a == phi, [&] {
        return "M=" + std::to_string(M) + " A(1,M)=" + a.get_str() + " phi=" + phi.get_str();
      });
    }
  });
}

CheckOutcome check_half(const HalfCheck& c) {
  return run_check("order_half_vs_generic_order", [&](Recorder& rec) {
    const Int two(2);
    for (std::uint64_t a = 5; a <= c.a_max; a += 2) {
      const Int az(static_cast<unsigned long>(a));
      const std::uint64_t closed = order_half(az);
      const OrderResult generic = order_of(az, two, c.cap);
      rec.expect(generic == OrderResult::finite(closed),
                 [&] { return "a=" + std::to_string(a) + " v2(a-3)=" + std::to_string(closed); });
    }
  });
}

CheckOutcome check_family(const FamilyCheck& c) {
  return run_check("family_witness_order", [&](Recorder& rec) {
    for (std::uint64_t M = 2; M <= c.m_max; ++M) {
      for (std::uint64_t n = 1; n <= c.n_max; ++n) {
        const Int a = family_witness(M, n);
        const OrderResult res = order(make_rat(a, Int(static_cast<unsigned long>(M))), n + 1);
        rec.expect(res == OrderResult::finite(n) && a % M == 1, [&] {
          return "M=" + std::to_string(M) + " n=" + std::to_string(n) + " a=" + a.get_str();
        });
      }
    }
  });
}

CheckOutcome check_partial_sums(const PartialSumCheck& c) {
  return run_check("partial_sum_closed_forms", [&](Recorder& rec) {
    const Rat one(Int(1));
    auto compare = [&](std::uint64_t M, std::uint64_t N, const Rat& expected) {
      const Rat got = partial_sum(M, N);
      rec.expect(got == expected, [&] {
        return "M=" + std::to_string(M) + " N=" + std::to_string(N) + " got=" +
               got.to_string() + " expected=" + expected.to_string();
      });
    };
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      const Int pz(static_cast<unsigned long>(p));
      for (std::uint64_t N = 1; N <= c.n_max; ++N)
        compare(p, N, one - Rat(pow(pz - 1, N), pow(pz, N)));
    }
    for (std::uint64_t N = 1; N <= c.n_max; ++N)
      compare(4, N, one - Rat(Int(static_cast<unsigned long>(N + 2)), pow(Int(2), N + 1)));
  });
}

}  // namespace

VerifyConfig VerifyConfig::defaults() {
  VerifyConfig c;
  c.class_equality = ClassEqualityCheck{};
  c.recurrence = RecurrenceCheck{};
  c.first_order = FirstOrderCheck{};
  c.half = HalfCheck{};
  c.family = FamilyCheck{};
  c.partial_sums = PartialSumCheck{};
  return c;
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

VerifyReport verify_all(const VerifyConfig& config) {
  VerifyReport report;
  if (config.class_equality)
    report.checks.push_back(check_class_equality(*config.class_equality, config.threads));
  if (config.recurrence) report.checks.push_back(check_recurrence(*config.recurrence));
  if (config.first_order) report.checks.push_back(check_first_order(*config.first_order));
  if (config.half) report.checks.push_back(check_half(*config.half));
  if (config.family) report.checks.push_back(check_family(*config.family));
  if (config.partial_sums) report.checks.push_back(check_partial_sums(*config.partial_sums));
  return report;
}

}  // namespace ordt
