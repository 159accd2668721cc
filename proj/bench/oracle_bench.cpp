// Serial reference vs OpenMP kernels for the two counting oracles.
// Usage: oracle_bench [brute_n_max] [dp_n_max]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "dyckgram/oracle.hpp"

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dyckgram;
  const std::size_t brute_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 13;
  const std::size_t dp_n = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 120;

  RestrictionQuad quad;
  quad.peaks = IntSet::progression(2, 3);
  quad.up_runs = IntSet::from(4);

  std::cout << "threads " << omp_get_max_threads() << "\n";

  CountTable a, b;
  double serial = time_ms([&] { a = serial::count_brute(brute_n, quad); });
  double parallel = time_ms([&] { b = count_brute(brute_n, quad); });
  std::cout << "brute n<=" << brute_n << "  serial " << serial << " ms  omp " << parallel << " ms  "
            << (same_counts(a, b) ? "agree" : "DISAGREE") << "\n";

  serial = time_ms([&] { a = serial::count_dp(dp_n, quad); });
  parallel = time_ms([&] { b = count_dp(dp_n, quad); });
  std::cout << "dp    n<=" << dp_n << "  serial " << serial << " ms  omp " << parallel << " ms  "
            << (same_counts(a, b) ? "agree" : "DISAGREE") << "\n";
  return same_counts(a, b) ? 0 : 1;
}
