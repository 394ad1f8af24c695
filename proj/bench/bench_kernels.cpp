// Serial reference kernels vs. their OpenMP counterparts.
//
//   ordt_bench [threads]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <omp.h>

#include "ordt/classes.hpp"
#include "ordt/density.hpp"
#include "ordt/scan.hpp"
#include "ordt/serial.hpp"

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const std::string& name, double serial, double parallel, bool same) {
  std::cout << name << ": serial " << serial << " s, openmp " << parallel << " s, speedup "
            << serial / parallel << (same ? "" : "  RESULTS DIFFER") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  std::cout << "threads: " << threads << '\n';

  {
    ordt::ClassSet s, p;
    const double ts = seconds([&] { s = ordt::serial::enumerate_bruteforce(4, 10, 1000); });
    const double tp = seconds([&] { p = ordt::enumerate_bruteforce(4, 10, 1000, {ordt::kDefaultBudget, threads}); });
    report("brute force R_{4,10}", ts, tp, s == p);
  }
  {
    ordt::ClassSet s, p;
    const double ts = seconds([&] { s = ordt::serial::enumerate_recursive(5, 12); });
    const double tp = seconds([&] { p = ordt::enumerate_recursive(5, 12, {ordt::kDefaultBudget, threads}); });
    report("recursive R_{5,12}", ts, tp, s == p);
  }
  {
    ordt::EmpiricalCounts s, p;
    const double ts = seconds([&] { s = ordt::serial::empirical_counts(3, 300'000, 30); });
    const double tp = seconds([&] { p = ordt::empirical_counts(3, 300'000, 30, threads); });
    report("empirical counts M=3, N=3e5", ts, tp, s == p);
  }
  {
    std::vector<ordt::Exceeder> s, p;
    const double ts = seconds([&] { s = ordt::serial::scan_block(7, 14, 200'000, 50); });
    const double tp = seconds([&] { p = ordt::scan_block(7, 14, 200'000, 50, threads); });
    report("scan block M=7, a<=2e5, cap 50", ts, tp, s == p);
  }
  return 0;
}
