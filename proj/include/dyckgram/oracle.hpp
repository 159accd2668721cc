#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dyckgram/bigint.hpp"
#include "dyckgram/intset.hpp"
#include "dyckgram/path.hpp"

namespace dyckgram {

inline constexpr std::size_t kDefaultEnumerationCap = 16;

enum class CountMethod { Brute, DP, Grammar };

std::string_view to_string(CountMethod m);

// Exact counts of a restricted class, indexed by semilength 0..n_max.
struct CountTable {
  CountMethod method = CountMethod::Brute;
  std::vector<BigInt> entries;

  std::size_t n_max() const { return entries.empty() ? 0 : entries.size() - 1; }
  const BigInt& operator[](std::size_t n) const { return entries.at(n); }
};

inline bool same_counts(const CountTable& a, const CountTable& b) { return a.entries == b.entries; }

// All Dyck paths of semilength n satisfying quad, lexicographic with U < D.
std::vector<DyckPath> enumerate(std::size_t n, const RestrictionQuad& quad,
                                std::size_t cap = kDefaultEnumerationCap);

// Exhaustive generation and filtering. Parallel over search-tree prefixes.
CountTable count_brute(std::size_t n_max, const RestrictionQuad& quad,
                       std::size_t cap = kDefaultEnumerationCap);

// Dynamic program over (height, run direction, run length). Parallel over
// heights within each step layer. No enumeration cap.
CountTable count_dp(std::size_t n_max, const RestrictionQuad& quad);

// Single-threaded reference implementations of the two counters, kept for
// cross-checking the parallel kernels and for benchmarking.
namespace serial {

CountTable count_brute(std::size_t n_max, const RestrictionQuad& quad,
                       std::size_t cap = kDefaultEnumerationCap);
CountTable count_dp(std::size_t n_max, const RestrictionQuad& quad);

}  // namespace serial

}  // namespace dyckgram
