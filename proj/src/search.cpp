#include "ordt/search.hpp"

#include "ordt/dynamics.hpp"
#include "ordt/errors.hpp"

namespace ordt {

Int family_witness(std::uint64_t M, std::uint64_t n) {
  if (M < 2 || n < 1) throw DomainError("family_witness needs M >= 2 and n >= 1");
  const Int Mz(static_cast<unsigned long>(M));
  return Mz + 1 + pow(Mz, n) * (Mz - 1);
}

MuSearchResult mu_search(std::uint64_t M, std::uint64_t n,
                         const std::optional<Int>& limit, std::uint64_t cap) {
  if (M < 2 || n < 1) throw DomainError("mu_search needs M >= 2 and n >= 1");
  if (cap < n) throw DomainError("mu_search needs cap >= n");
  MuSearchResult out;
  out.M = M;
  out.n = n;
  out.limit = limit ? *limit : family_witness(M, n);

  const Int Mz(static_cast<unsigned long>(M));
  for (Int a = 2 * Mz; a <= out.limit; ++a) {
    if (gcd(a, Mz) != 1) continue;
    const OrderResult res = order_of(a, Mz, cap);
    if (!res.is_finite()) {
      out.cap_incidents.push_back(a);
      continue;
    }
    if (res.order() == n) {
      out.entry = MuEntry{M, n, a};
      break;
    }
  }
  return out;
}

}  // namespace ordt
