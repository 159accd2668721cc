#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dyckgram/bigint.hpp"
#include "dyckgram/intset.hpp"
#include "dyckgram/path.hpp"

namespace dyckgram {

// A +-1 walk from height 0 with no sign constraint.
struct Walk {
  std::vector<int> steps;

  std::size_t size() const { return steps.size(); }
  long end_height() const;
  // Heights after each step.
  std::vector<long> heights() const;
  std::string str() const;  // U/D letters

  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;
};

// Peaks and valleys avoid {2, 4, 6, ...}.
RestrictionQuad parity_quad();
bool is_parity_path(const DyckPath& p);

class NotInDomain : public Error {
 public:
  using Error::Error;
};

class NotInCodomain : public Error {
 public:
  using Error::Error;
};

// For a nonempty parity path of semilength s, the walk of length s - 1 read
// off the step pairs (2k, 2k+1). A return to height 0 after step 2k crosses
// the walk between 0 and -1; a UU pair moves away from that boundary
// (up from >= 0, down from <= -1) and a DD pair moves toward it.
Walk path_to_walk(const DyckPath& p);

// Inverse of path_to_walk. The walk must end at 0 when its length is even and
// at -1 when it is odd; the path has semilength size() + 1.
DyckPath walk_to_path(const Walk& w);

struct BijectionRow {
  std::size_t semilength = 0;
  BigInt oracle_count;
  BigInt formula_count;
  std::size_t walks = 0;  // size of the walk set the map should hit
  bool round_trip = true;
  bool counts_match = true;
};

struct BijectionReport {
  bool pass = true;
  std::vector<BijectionRow> rows;
  std::string failure;
};

// For every m <= max_semilength: oracle count vs the binomial formula, and
// both maps checked as mutually inverse bijections between the enumerated
// path set and the full walk set. Rows are computed in parallel.
BijectionReport verify_counts(std::size_t max_semilength);

}  // namespace dyckgram
