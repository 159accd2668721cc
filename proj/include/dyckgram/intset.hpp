#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dyckgram/error.hpp"

namespace dyckgram {

// Avoid-sets of positive integers: finite unions of singletons, closed ranges
// and arithmetic progressions {step*r + base | r >= 0}.
class IntSet {
 public:
  struct Single {
    long value;
  };
  struct Range {
    long lo;
    long hi;
  };
  struct Progression {
    long step;
    long base;
  };
  using Atom = std::variant<Single, Range, Progression>;

  IntSet() = default;

  static IntSet single(long v);
  static IntSet range(long lo, long hi);
  // {base, base+1, ...}
  static IntSet from(long base) { return progression(1, base); }
  static IntSet progression(long step, long base);

  IntSet& add(Atom atom);

  bool contains(long v) const;
  bool empty() const { return atoms_.empty(); }
  const std::vector<Atom>& atoms() const { return atoms_; }

  // Canonical text in the parse_set language; parse_set(s.str()) == s.
  std::string str() const;

  friend bool operator==(const IntSet& a, const IntSet& b) { return a.str() == b.str(); }

 private:
  std::vector<Atom> atoms_;
};

class SetParseError : public Error {
 public:
  enum class Kind { Syntax, NonPositiveValue, BadProgression, EmptyRange };

  SetParseError(Kind kind, std::size_t position, std::string detail);

  Kind kind() const { return kind_; }
  // 0-based offset into the input text.
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

// set  := "" | atom ("," atom)*
// atom := INT | INT ".." INT | INT ".." | "ap(" INT "," INT ")"
// Blanks between tokens are ignored.
IntSet parse_set(std::string_view text);

// The four avoid-sets of P(A, B, C, D).
struct RestrictionQuad {
  IntSet peaks;
  IntSet valleys;
  IntSet up_runs;
  IntSet down_runs;

  // Swap of the run slots; the image of the class under reverse_complement.
  RestrictionQuad mirrored() const { return {peaks, valleys, down_runs, up_runs}; }

  std::string str() const;

  friend bool operator==(const RestrictionQuad&, const RestrictionQuad&) = default;
};

}  // namespace dyckgram
