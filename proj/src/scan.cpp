#include "ordt/scan.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <omp.h>

#include "ordt/arith.hpp"
#include "ordt/dynamics.hpp"
#include "ordt/errors.hpp"
#include "ordt/serialize.hpp"

namespace ordt {

std::vector<Exceeder> scan_block(std::uint64_t M, std::uint64_t lo, std::uint64_t hi,
                                 std::uint64_t cap, int threads) {
  std::vector<Exceeder> out;
  if (lo > hi) return out;
  if (threads > 0) omp_set_num_threads(threads);
  const Int Mz(static_cast<unsigned long>(M));
  const auto first = static_cast<std::int64_t>(lo);
  const auto last = static_cast<std::int64_t>(hi);

#pragma omp parallel
  {
    std::vector<Exceeder> local;
    Int a, last_den;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t ai = first; ai <= last; ++ai) {
      const auto v = static_cast<std::uint64_t>(ai);
      if (gcd(v, M) != 1) continue;
      a = static_cast<unsigned long>(v);
      if (!order_of(a, Mz, cap, last_den).is_finite())
        local.push_back({v, M, cap, last_den.get_ui()});
    }
#pragma omp critical(ordt_scan_merge)
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool scan_complete(const ScanCheckpoint& cp, std::uint64_t a_hi) {
  for (std::uint64_t M = cp.m_lo; M <= cp.m_hi; ++M) {
    auto it = cp.a_scanned_up_to.find(M);
    if (it == cp.a_scanned_up_to.end() || it->second < std::max(a_hi, 2 * M - 1)) return false;
  }
  return true;
}

ScanCheckpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open checkpoint " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return checkpoint_from_json(buf.str());
}

void save_checkpoint(const std::filesystem::path& path, const ScanCheckpoint& cp) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw FormatError("cannot write checkpoint " + tmp.string());
    out << checkpoint_to_json(cp);
    if (!out) throw FormatError("short write on checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace {

ScanCheckpoint fresh_checkpoint(const ScanOptions& opts) {
  ScanCheckpoint cp;
  cp.created_by = std::string("ordt ") + ORDT_VERSION;
  cp.m_lo = opts.m_lo;
  cp.m_hi = opts.m_hi;
  cp.cap = opts.cap;
  for (std::uint64_t M = opts.m_lo; M <= opts.m_hi; ++M) cp.a_scanned_up_to[M] = 2 * M - 1;
  return cp;
}

void check_resumable(const ScanCheckpoint& cp, const ScanOptions& opts) {
  if (cp.schema_version != kCheckpointSchema)
    throw FormatError("checkpoint schema_version " + std::to_string(cp.schema_version) +
                      " is not supported (expected " + std::to_string(kCheckpointSchema) + ")");
  if (cp.m_lo != opts.m_lo || cp.m_hi != opts.m_hi)
    throw FormatError("checkpoint covers M in [" + std::to_string(cp.m_lo) + ", " +
                      std::to_string(cp.m_hi) + "], not the requested range");
  if (cp.cap != opts.cap)
    throw FormatError("checkpoint was taken with cap " + std::to_string(cp.cap) +
                      ", refusing to resume with cap " + std::to_string(opts.cap));
  for (std::uint64_t M = opts.m_lo; M <= opts.m_hi; ++M)
    if (!cp.a_scanned_up_to.contains(M))
      throw FormatError("checkpoint has no watermark for M = " + std::to_string(M));
}

}  // namespace

ScanCheckpoint conjecture_scan(const ScanOptions& opts) {
  if (opts.m_lo < 2 || opts.m_lo > opts.m_hi)
    throw DomainError("scan needs 2 <= M_lo <= M_hi");
  if (opts.cap < 1) throw DomainError("scan needs cap >= 1");
  if (opts.cadence < 1) throw DomainError("scan cadence must be positive");

  const bool persist = !opts.checkpoint_path.empty();
  ScanCheckpoint cp;
  if (persist && std::filesystem::exists(opts.checkpoint_path)) {
    cp = load_checkpoint(opts.checkpoint_path);
    check_resumable(cp, opts);
  } else {
    cp = fresh_checkpoint(opts);
  }

  std::uint64_t processed = 0;
  auto interrupted = [&] {
    if (opts.stop && opts.stop->load()) return true;
    return opts.max_numerators > 0 && processed >= opts.max_numerators;
  };

  for (std::uint64_t M = opts.m_lo; M <= opts.m_hi && !interrupted(); ++M) {
    std::uint64_t& mark = cp.a_scanned_up_to[M];
    while (mark < opts.a_hi && !interrupted()) {
      const std::uint64_t lo = mark + 1;
      const std::uint64_t hi = std::min(opts.a_hi, mark + opts.cadence);
      auto found = scan_block(M, lo, hi, opts.cap, opts.threads);
      cp.exceeders.insert(cp.exceeders.end(), found.begin(), found.end());
      std::sort(cp.exceeders.begin(), cp.exceeders.end());
      processed += hi - lo + 1;
      mark = hi;
      if (persist) save_checkpoint(opts.checkpoint_path, cp);
    }
  }
  if (persist) save_checkpoint(opts.checkpoint_path, cp);
  return cp;
}

}  // namespace ordt
