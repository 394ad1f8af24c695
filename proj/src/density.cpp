#include "ordt/density.hpp"

#include <omp.h>

#include "ordt/classes.hpp"
#include "ordt/dynamics.hpp"
#include "ordt/errors.hpp"

namespace ordt {

void EmpiricalCounts::merge(const EmpiricalCounts& other) {
  counted_b += other.counted_b;
  counted_admissible += other.counted_admissible;
  counted_finite += other.counted_finite;
  cap_exceeded += other.cap_exceeded;
  for (const auto& [n, c] : other.per_order) per_order[n] += c;
}

std::uint64_t EmpiricalCounts::observed(std::uint64_t n) const {
  auto it = per_order.find(n);
  return it == per_order.end() ? 0 : it->second;
}

namespace {

Int phi_power(std::uint64_t M, std::uint64_t n) {
  return pow(Int(static_cast<unsigned long>(M)), n) *
         Int(static_cast<unsigned long>(totient(M)));
}

void require_denominator(std::uint64_t M) {
  if (M == 0) throw DomainError("denominator must be >= 1");
}

}  // namespace

std::vector<DensityTerm> density_terms(std::uint64_t M, std::uint64_t N) {
  require_denominator(M);
  CountTable table;
  std::vector<DensityTerm> out;
  out.reserve(N + 1);
  for (std::uint64_t n = 0; n <= N; ++n) {
    DensityTerm t;
    t.n = n;
    t.count = table.get(n, M);
    t.phi = phi_power(M, n);
    t.term = Rat(t.count, t.phi);
    out.push_back(std::move(t));
  }
  return out;
}

Rat term(std::uint64_t M, std::uint64_t n) {
  require_denominator(M);
  CountTable table;
  return Rat(table.get(n, M), phi_power(M, n));
}

Rat partial_sum(std::uint64_t M, std::uint64_t N) {
  Rat sum;
  for (const auto& t : density_terms(M, N)) sum = sum + t.term;
  return sum;
}

SandwichBounds sandwich_bounds(std::uint64_t M, std::uint64_t n, std::uint64_t N) {
  if (M < 2) throw DomainError("sandwich bounds need M >= 2");
  const Int count = count_recurrence(n, M);
  const Int block = pow(Int(static_cast<unsigned long>(M)), n + 1);
  const Int phi(static_cast<unsigned long>(totient(M)));
  const Int Mz(static_cast<unsigned long>(M)), Nz(static_cast<unsigned long>(N));

  // A (N/B - 1) / (phi (N/M + 1)) and A (N/B + 1) / (phi (N/M - 1)), B = M^{n+1}.
  SandwichBounds out{Rat(), Rat(Int(1))};
  const Int lower_num = count * (Nz - block) * Mz;
  if (lower_num > 0) out.lower = Rat(lower_num, block * phi * (Nz + Mz));
  if (Nz > Mz) {
    const Rat upper(count * (Nz + block) * Mz, block * phi * (Nz - Mz));
    if (upper < out.upper) out.upper = upper;
  }
  return out;
}

EmpiricalCounts empirical_counts(std::uint64_t M, std::uint64_t n_max,
                                 std::uint64_t cap, int threads) {
  if (M < 2) throw DomainError("empirical density needs M >= 2");
  if (threads > 0) omp_set_num_threads(threads);
  EmpiricalCounts total{M, n_max, cap, 0, 0, 0, 0, {}};
  const Int Mz(static_cast<unsigned long>(M));
  constexpr std::int64_t kBlock = 4096;
  const auto blocks = static_cast<std::int64_t>(n_max / kBlock + 1);

#pragma omp parallel
  {
    EmpiricalCounts local{M, n_max, cap, 0, 0, 0, 0, {}};
    Int a;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t b = 0; b < blocks; ++b) {
      const std::uint64_t lo = std::max<std::uint64_t>(1, b * kBlock);
      const std::uint64_t hi = std::min<std::uint64_t>(n_max, (b + 1) * kBlock - 1);
      for (std::uint64_t v = lo; v <= hi; ++v) {
        if (gcd(v, M) != 1) continue;
        ++local.counted_b;
        if (v < 2 * M) continue;
        ++local.counted_admissible;
        a = static_cast<unsigned long>(v);
        const OrderResult res = order_of(a, Mz, cap);
        if (res.is_finite()) {
          ++local.counted_finite;
          ++local.per_order[res.order()];
        } else {
          ++local.cap_exceeded;
        }
      }
    }
#pragma omp critical(ordt_density_merge)
    total.merge(local);
  }
  return total;
}

DensityReport density_report(std::uint64_t M, std::uint64_t terms) {
  DensityReport report;
  report.M = M;
  report.terms = density_terms(M, terms);
  for (const auto& t : report.terms) report.partial_sum = report.partial_sum + t.term;
  return report;
}

DensityReport empirical_density(std::uint64_t M, std::uint64_t n_max,
                                std::uint64_t cap, int threads) {
  DensityReport report = density_report(M, cap);
  report.empirical = empirical_counts(M, n_max, cap, threads);
  return report;
}

}  // namespace ordt
