#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dyckgram/grammar.hpp"
#include "dyckgram/intset.hpp"
#include "dyckgram/series.hpp"

namespace dyckgram {

enum class FamilyId { F1, F2, F3, F5, F6, F7, F8, F9, F10, F11 };

std::string_view to_string(FamilyId id);
FamilyId parse_family_id(std::string_view text);
const std::vector<FamilyId>& all_families();

using FamilyParams = std::map<std::string, long>;

// "A=2,B=1" -> {A: 2, B: 1}
FamilyParams parse_params(std::string_view text);
std::string to_string(const FamilyParams& params);

class BadParams : public Error {
 public:
  using Error::Error;
};

struct FamilyInstance {
  FamilyId id;
  FamilyParams params;
  RestrictionQuad quad;
  // Language of every nonterminal of a plain grammar (the start symbol's is
  // `quad`); used to check auxiliary nonterminals against the oracle too.
  std::map<std::string, RestrictionQuad> languages;
  // Plain grammars have a start symbol; equations are multiset identities.
  std::variant<Grammar, GrammaticalEquation> body;
  // Hand-written generating-function system the body must lower to. Absent
  // for F10 and F11, whose system is taken from lowering alone. For F7 and F8
  // this is the system read off the grammar (union from k = 1 plus the empty
  // path), not the printed one.
  std::optional<SeriesSystem> expected_system;
  // Down-run families only: the printed generating-function equation whose
  // sum starts at k = 0. Kept to exhibit its surplus constant term.
  std::optional<SeriesSystem> printed_variant;

  bool is_grammar() const { return std::holds_alternative<Grammar>(body); }
  std::string name() const;
};

// Valid ranges: F5, F7: 1 <= B < A. F6, F8: 1 <= A <= B. F9: r >= 1.
// F10: m, n >= 1. F11: 1 <= k <= r. F1, F2, F3 take no parameters.
FamilyInstance build(FamilyId id, const FamilyParams& params = {});

// Every parameter assignment in the validity sweep for a family.
std::vector<FamilyParams> sweep_params(FamilyId id, long max_a = 4, long max_b = 6, long max_r = 4);

SeriesSystem lower(const FamilyInstance& f);

// The grammar or equation as text: one alternative per line.
std::string dump_body(const FamilyInstance& f);

}  // namespace dyckgram
