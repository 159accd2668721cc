#include "dyckgram/intset.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace dyckgram {

namespace {

const char* kind_name(SetParseError::Kind kind) {
  switch (kind) {
    case SetParseError::Kind::Syntax: return "syntax error";
    case SetParseError::Kind::NonPositiveValue: return "non-positive value";
    case SetParseError::Kind::BadProgression: return "bad progression";
    case SetParseError::Kind::EmptyRange: return "empty range";
  }
  return "error";
}

class SetParser {
 public:
  explicit SetParser(std::string_view text) : text_(text) {}

  IntSet parse() {
    IntSet out;
    skip_blanks();
    if (at_end()) return out;
    out.add(atom());
    skip_blanks();
    while (!at_end()) {
      expect(',');
      out.add(atom());
      skip_blanks();
    }
    return out;
  }

 private:
  IntSet::Atom atom() {
    skip_blanks();
    if (text_.substr(pos_, 3) == "ap(") {
      std::size_t at = pos_;
      pos_ += 3;
      long step = integer();
      expect(',');
      long base = integer();
      expect(')');
      if (step < 1 || base < 1)
        fail(SetParseError::Kind::BadProgression, at,
             "ap(" + std::to_string(step) + "," + std::to_string(base) + ") needs step >= 1 and base >= 1");
      return IntSet::Progression{step, base};
    }
    std::size_t at = pos_;
    long lo = positive(integer(), at);
    skip_blanks();
    if (text_.substr(pos_, 2) != "..") return IntSet::Single{lo};
    pos_ += 2;
    skip_blanks();
    if (at_end() || text_[pos_] == ',') return IntSet::Progression{1, lo};
    std::size_t hi_at = pos_;
    long hi = positive(integer(), hi_at);
    if (hi < lo)
      fail(SetParseError::Kind::EmptyRange, at, std::to_string(lo) + ".." + std::to_string(hi));
    return IntSet::Range{lo, hi};
  }

  long integer() {
    skip_blanks();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_)
      fail(SetParseError::Kind::Syntax, start, "expected an integer");
    return value;
  }

  long positive(long v, std::size_t at) {
    if (v < 1) fail(SetParseError::Kind::NonPositiveValue, at, std::to_string(v));
    return v;
  }

  void expect(char c) {
    skip_blanks();
    if (at_end() || text_[pos_] != c)
      fail(SetParseError::Kind::Syntax, pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_blanks() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(SetParseError::Kind kind, std::size_t at, std::string detail) {
    throw SetParseError(kind, at, std::move(detail));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SetParseError::SetParseError(Kind kind, std::size_t position, std::string detail)
    : Error("avoid-set " + std::string(kind_name(kind)) + " at offset " + std::to_string(position) + ": " +
            detail),
      kind_(kind),
      position_(position) {}

IntSet IntSet::single(long v) { return IntSet{}.add(Single{v}); }
IntSet IntSet::range(long lo, long hi) { return IntSet{}.add(Range{lo, hi}); }
IntSet IntSet::progression(long step, long base) { return IntSet{}.add(Progression{step, base}); }

IntSet& IntSet::add(Atom atom) {
  if (auto* s = std::get_if<Single>(&atom)) {
    if (s->value < 1) throw SetParseError(SetParseError::Kind::NonPositiveValue, 0, std::to_string(s->value));
  } else if (auto* r = std::get_if<Range>(&atom)) {
    if (r->lo < 1) throw SetParseError(SetParseError::Kind::NonPositiveValue, 0, std::to_string(r->lo));
    if (r->hi < r->lo) throw SetParseError(SetParseError::Kind::EmptyRange, 0, "range");
  } else {
    auto& p = std::get<Progression>(atom);
    if (p.step < 1 || p.base < 1) throw SetParseError(SetParseError::Kind::BadProgression, 0, "progression");
  }
  atoms_.push_back(atom);
  return *this;
}

bool IntSet::contains(long v) const {
  if (v < 1) return false;
  for (const auto& atom : atoms_) {
    if (auto* s = std::get_if<Single>(&atom)) {
      if (s->value == v) return true;
    } else if (auto* r = std::get_if<Range>(&atom)) {
      if (r->lo <= v && v <= r->hi) return true;
    } else {
      auto& p = std::get<Progression>(atom);
      if (v >= p.base && (v - p.base) % p.step == 0) return true;
    }
  }
  return false;
}

std::string IntSet::str() const {
  std::string out;
  for (const auto& atom : atoms_) {
    if (!out.empty()) out += ',';
    if (auto* s = std::get_if<Single>(&atom)) {
      out += std::to_string(s->value);
    } else if (auto* r = std::get_if<Range>(&atom)) {
      out += std::to_string(r->lo) + ".." + std::to_string(r->hi);
    } else {
      auto& p = std::get<Progression>(atom);
      if (p.step == 1)
        out += std::to_string(p.base) + "..";
      else
        out += "ap(" + std::to_string(p.step) + "," + std::to_string(p.base) + ")";
    }
  }
  return out;
}

IntSet parse_set(std::string_view text) { return SetParser(text).parse(); }

std::string RestrictionQuad::str() const {
  return "peaks={" + peaks.str() + "} valleys={" + valleys.str() + "} upruns={" + up_runs.str() +
         "} downruns={" + down_runs.str() + "}";
}

}  // namespace dyckgram
