#pragma once

// Single-threaded reference versions of the OpenMP kernels. They go through
// the generic Rat-based dynamics and plain containers, and exist so tests and
// the benchmark can compare the parallel kernels against them.

#include <cstdint>
#include <vector>

#include "ordt/classes.hpp"
#include "ordt/density.hpp"
#include "ordt/scan.hpp"

namespace ordt::serial {

ClassSet enumerate_bruteforce(std::uint64_t n, std::uint64_t M, std::uint64_t cap,
                              std::uint64_t budget = kDefaultBudget);

ClassSet enumerate_recursive(std::uint64_t n, std::uint64_t M,
                             std::uint64_t budget = kDefaultBudget);

EmpiricalCounts empirical_counts(std::uint64_t M, std::uint64_t n_max, std::uint64_t cap);

std::vector<Exceeder> scan_block(std::uint64_t M, std::uint64_t lo, std::uint64_t hi,
                                 std::uint64_t cap);

}  // namespace ordt::serial
