#pragma once

#include <atomic>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace ordt {

inline constexpr std::uint64_t kCheckpointSchema = 1;
inline constexpr std::uint64_t kCheckpointCadence = 10'000;

// A numerator whose orbit had not reached an integer after `iterations`
// steps. This is an unresolved case, not a proof of infinite order.
struct Exceeder {
  std::uint64_t a = 0;
  std::uint64_t M = 0;
  std::uint64_t iterations = 0;
  std::uint64_t last_denominator = 0;

  friend auto operator<=>(const Exceeder& x, const Exceeder& y) {
    return std::tie(x.M, x.a, x.iterations, x.last_denominator) <=>
           std::tie(y.M, y.a, y.iterations, y.last_denominator);
  }
  bool operator==(const Exceeder&) const = default;
};

struct ScanCheckpoint {
  std::uint64_t schema_version = kCheckpointSchema;
  std::string created_by;
  std::uint64_t m_lo = 0;
  std::uint64_t m_hi = 0;
  std::uint64_t cap = 0;
  // Every coprime a in [2M, a_scanned_up_to[M]] has been checked.
  std::map<std::uint64_t, std::uint64_t> a_scanned_up_to;
  std::vector<Exceeder> exceeders;  // sorted by (M, a)

  bool operator==(const ScanCheckpoint&) const = default;
};

struct ScanOptions {
  std::uint64_t m_lo = 2;
  std::uint64_t m_hi = 2;
  std::uint64_t a_hi = 0;
  std::uint64_t cap = 1000;
  std::filesystem::path checkpoint_path;  // empty: keep everything in memory
  std::uint64_t cadence = kCheckpointCadence;
  int threads = 0;
  // Stop (and persist) once at least this many numerators were processed in
  // this call; 0 means no limit.
  std::uint64_t max_numerators = 0;
  const std::atomic<bool>* stop = nullptr;
};

// Order computation for every coprime a in [lo, hi] over M with the given
// cap; returns the unresolved ones sorted by a. OpenMP-parallel.
std::vector<Exceeder> scan_block(std::uint64_t M, std::uint64_t lo, std::uint64_t hi,
                                 std::uint64_t cap, int threads = 0);

// Denominator loop M ascending, numerator a ascending, persisted every
// `cadence` numerators. Resumes from an existing checkpoint file, and refuses
// (FormatError) one with a different schema, M range or cap.
ScanCheckpoint conjecture_scan(const ScanOptions& opts);

bool scan_complete(const ScanCheckpoint& cp, std::uint64_t a_hi);

ScanCheckpoint load_checkpoint(const std::filesystem::path& path);
// Writes via a temporary file and rename so a crash never leaves a torn file.
void save_checkpoint(const std::filesystem::path& path, const ScanCheckpoint& cp);

}  // namespace ordt
