#include "ordt/classes.hpp"

#include <algorithm>
#include <string>

#include <omp.h>

#include "ordt/dynamics.hpp"
#include "ordt/errors.hpp"

namespace ordt {

bool ClassSet::contains(std::uint64_t k) const {
  return std::binary_search(residues.begin(), residues.end(), k);
}

const Int& CountTable::get(std::uint64_t n, std::uint64_t M) {
  if (M == 0) throw DomainError("A(n, M) needs M >= 1");
  const Key key{n, M};
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;

  Int value;
  if (n == 0) {
    value = (M == 1) ? 1 : 0;
  } else if (M == 1) {
    value = 0;
  } else {
    Int sum = 0;
    for (std::uint64_t d : divisors(M)) {
      const Int& prev = get(n - 1, d);
      if (prev == 0) continue;
      sum += prev * pow(Int(static_cast<unsigned long>(M / d)), n - 1);
    }
    value = Int(static_cast<unsigned long>(totient(M))) * sum;
  }
  return entries_.emplace(key, std::move(value)).first->second;
}

void CountTable::set(std::uint64_t n, std::uint64_t M, const Int& value) {
  entries_[{n, M}] = value;
}

Int count_recurrence(std::uint64_t n, std::uint64_t M) {
  CountTable table;
  return table.get(n, M);
}

Int count_prime_power(std::uint64_t n, std::uint64_t p, unsigned s) {
  if (!is_prime(p)) throw DomainError("count_prime_power: p must be prime");
  if (n < 1 || s < 1) throw DomainError("count_prime_power: needs n >= 1 and s >= 1");
  Int binom;
  mpz_bin_uiui(binom.get_mpz_t(), n + s - 2, s - 1);
  const Int ps = pow(Int(static_cast<unsigned long>(p)), s);
  const Int phi = ps - ps / p;
  return binom * pow(phi, n);
}

std::uint64_t class_modulus(std::uint64_t n, std::uint64_t M, std::uint64_t budget) {
  std::uint64_t modulus = 0;
  if (!checked_pow(M, static_cast<unsigned>(n + 1), budget, modulus))
    throw BudgetExceeded("R_{" + std::to_string(n) + "," + std::to_string(M) +
                         "} needs " + std::to_string(M) + "^" + std::to_string(n + 1) +
                         " residues, over the budget of " + std::to_string(budget));
  return modulus;
}

namespace {

void check_class_args(std::uint64_t n, std::uint64_t M) {
  if (M < 2) throw DomainError("class sets need M >= 2");
  if (n < 1) throw DomainError("class sets need n >= 1");
}

void set_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

// Membership bitmap of R_{level,N} over [0, N^{level+1}).
using Bitmap = std::vector<char>;
using LevelMemo = std::map<std::pair<std::uint64_t, std::uint64_t>, Bitmap>;

const Bitmap& level_bitmap(std::uint64_t level, std::uint64_t M, LevelMemo& memo) {
  const auto key = std::make_pair(level, M);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  std::uint64_t modulus = 1;
  for (std::uint64_t i = 0; i <= level; ++i) modulus *= M;
  Bitmap bits(modulus, 0);

  if (level == 1) {
    for (std::uint64_t k = 1; k < M; ++k)
      if (gcd(k, M) == 1) bits[k] = 1;
    return memo.emplace(key, std::move(bits)).first->second;
  }

  // Sub-levels first, single-threaded, so the parallel loop below only reads.
  const std::uint64_t q_count = modulus / M;  // M^level
  std::map<std::uint64_t, const Bitmap*> sub;
  std::map<std::uint64_t, std::uint64_t> sub_modulus;
  for (std::uint64_t N : divisors(M)) {
    if (N == 1) continue;
    sub[N] = &level_bitmap(level - 1, N, memo);
    sub_modulus[N] = sub[N]->size();  // N^level
  }
  std::vector<const Bitmap*> sub_by_h(M + 1, nullptr);
  std::vector<std::uint64_t> mod_by_h(M + 1, 0);
  for (const auto& [N, bm] : sub) {
    sub_by_h[M / N] = bm;
    mod_by_h[M / N] = sub_modulus[N];
  }

  std::vector<std::uint64_t> cs;
  for (std::uint64_t c = 1; c < M; ++c)
    if (gcd(c, M) == 1) cs.push_back(c);

  const auto q_total = static_cast<std::int64_t>(q_count);
#pragma omp parallel for schedule(static)
  for (std::int64_t qi = 0; qi < q_total; ++qi) {
    const auto q = static_cast<std::uint64_t>(qi);
    const std::uint64_t h = gcd(q, M);  // gcd(0, M) = M, so q = 0 gives N = 1
    if (h == M) continue;
    const Bitmap& target = *sub_by_h[h];
    const std::uint64_t sub_mod = mod_by_h[h];
    const std::uint64_t scaled = (q / h) % sub_mod;
    for (std::uint64_t c : cs) {
      const auto image = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(scaled) * ((M + c) % sub_mod) % sub_mod);
      if (target[image]) bits[q * M + c] = 1;
    }
  }
  return memo.emplace(key, std::move(bits)).first->second;
}

}  // namespace

ClassSet enumerate_recursive(std::uint64_t n, std::uint64_t M,
                             const EnumerationOptions& opts) {
  check_class_args(n, M);
  const std::uint64_t modulus = class_modulus(n, M, opts.budget);
  set_threads(opts.threads);
  LevelMemo memo;
  const Bitmap& bits = level_bitmap(n, M, memo);
  ClassSet out{n, M, modulus, {}};
  for (std::uint64_t k = 0; k < modulus; ++k)
    if (bits[k]) out.residues.push_back(k);
  return out;
}

ClassSet enumerate_bruteforce(std::uint64_t n, std::uint64_t M, std::uint64_t cap,
                              const EnumerationOptions& opts) {
  check_class_args(n, M);
  if (cap <= n) throw DomainError("enumerate_bruteforce: cap must exceed n");
  const std::uint64_t modulus = class_modulus(n, M, opts.budget);
  set_threads(opts.threads);

  Bitmap hit(modulus, 0);
  std::int64_t first_failure = -1;
  const Int Mz(static_cast<unsigned long>(M));
  const auto total = static_cast<std::int64_t>(modulus);
#pragma omp parallel
  {
    Int a;
#pragma omp for schedule(dynamic, 1024)
    for (std::int64_t ki = 0; ki < total; ++ki) {
      const auto k = static_cast<std::uint64_t>(ki);
      if (gcd(k, M) != 1) continue;
      const std::uint64_t rep = k >= 2 * M ? k : k + modulus;
      a = static_cast<unsigned long>(rep);
      const OrderResult res = order_of(a, Mz, cap);
      if (!res.is_finite()) {
#pragma omp critical(ordt_brute_failure)
        if (first_failure < 0 || ki < first_failure) first_failure = ki;
        continue;
      }
      if (res.order() == n) hit[k] = 1;
    }
  }
  if (first_failure >= 0) {
    const auto k = static_cast<std::uint64_t>(first_failure);
    const std::uint64_t rep = k >= 2 * M ? k : k + modulus;
    throw CheckFailure("representative " + std::to_string(rep) + "/" + std::to_string(M) +
                       " exceeded the cap of " + std::to_string(cap) +
                       "; the enumeration of R_{" + std::to_string(n) + "," +
                       std::to_string(M) + "} is unresolved");
  }
  ClassSet out{n, M, modulus, {}};
  for (std::uint64_t k = 0; k < modulus; ++k)
    if (hit[k]) out.residues.push_back(k);
  return out;
}

bool classify(const Int& a, std::uint64_t M, std::uint64_t n,
              const EnumerationOptions& opts) {
  check_class_args(n, M);
  const Int Mz(static_cast<unsigned long>(M));
  if (gcd(a, Mz) != 1) throw DomainError("classify: a must be coprime to M");
  if (a < 2 * Mz) throw DomainError("classify: a must be >= 2M");
  const ClassSet set = enumerate_recursive(n, M, opts);
  const Int k = a % Int(static_cast<unsigned long>(set.modulus));
  return set.contains(k.get_ui());
}

}  // namespace ordt
