#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dyckgram/error.hpp"

namespace dyckgram {

enum class Step : unsigned char { Up, Down };

inline char to_char(Step s) { return s == Step::Up ? 'U' : 'D'; }

// A prefix dips below height zero. `position` is the 1-based index of the
// offending step.
class NegativePrefix : public Error {
 public:
  explicit NegativePrefix(std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnbalancedPath : public Error {
 public:
  explicit UnbalancedPath(long final_height);
  long final_height() const { return final_height_; }

 private:
  long final_height_;
};

class IntSet;
struct RestrictionQuad;

// A validated Dyck path. Only constructible through validate()/parse_path(),
// so every instance satisfies the prefix and balance conditions.
class DyckPath {
 public:
  DyckPath() = default;

  static DyckPath validate(std::vector<Step> steps);

  std::span<const Step> steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  std::size_t semilength() const { return steps_.size() / 2; }
  bool empty() const { return steps_.empty(); }

  std::string str() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {}
  std::vector<Step> steps_;
};

// Parses the U/D text form. Any other character is rejected with Error.
std::vector<Step> parse_steps(std::string_view text);
DyckPath parse_path(std::string_view text);

struct PathFeatures {
  std::vector<long> peaks;
  std::vector<long> valleys;
  std::vector<long> up_runs;
  std::vector<long> down_runs;
};

PathFeatures features(const DyckPath& path);

// True iff no peak height, valley height or run length falls in the
// corresponding avoid-set. The empty path always satisfies.
bool satisfies(const DyckPath& path, const RestrictionQuad& quad);

// Same test on a raw step sequence already known to be a Dyck path.
bool satisfies(std::span<const Step> steps, const RestrictionQuad& quad);

// Reverse the path and swap U with D.
DyckPath reverse_complement(const DyckPath& path);

}  // namespace dyckgram
