#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dyckgram/intset.hpp"
#include "dyckgram/path.hpp"
#include "dyckgram/series.hpp"

namespace dyckgram {

// Right-hand-side expression over the terminals U, D and named nonterminals.
class GExpr {
 public:
  struct Epsilon {};
  struct Terminal {
    Step step;
  };
  struct NonTerminal {
    std::string name;
  };
  struct Concat {
    std::vector<GExpr> parts;
  };
  struct Power {
    std::shared_ptr<const GExpr> base;
    unsigned exponent;
  };
  using Node = std::variant<Epsilon, Terminal, NonTerminal, Concat, Power>;

  GExpr() : node_(Epsilon{}) {}
  explicit GExpr(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }

  // Text form: "U U D Q D P", "(D P)^3", "eps".
  std::string str() const;

 private:
  Node node_;
};

GExpr eps();
GExpr up();
GExpr down();
GExpr nt(std::string name);
GExpr cat(std::vector<GExpr> parts);
// Power(e, 0) is epsilon.
GExpr power(GExpr base, unsigned k);

// Parses the text form of a single expression.
GExpr parse_expr(std::string_view text);

class Grammar {
 public:
  Grammar() = default;

  // Declares name on first use; the first declared nonterminal is the start symbol.
  Grammar& rule(const std::string& name, GExpr alternative);
  Grammar& declare(const std::string& name);

  const std::vector<std::string>& nonterminals() const { return order_; }
  const std::vector<GExpr>& alternatives(const std::string& name) const;
  bool defines(const std::string& name) const { return rules_.contains(name); }
  const std::string& start() const;

  // One alternative per line: "P -> U U D Q D P".
  std::string str() const;

 private:
  std::vector<std::string> order_;
  std::map<std::string, std::vector<GExpr>> rules_;
};

// Lines of the form "NAME -> expr"; blank lines and '#' comments ignored.
Grammar parse_grammar(std::string_view text);

// lhs_1 u ... u lhs_a = rhs_1 u ... u rhs_b, read as a multiset identity, for
// the language of `unknown`.
struct GrammaticalEquation {
  std::string unknown = "P";
  std::vector<GExpr> lhs;
  std::vector<GExpr> rhs;
  Grammar env;

  std::string str() const;
};

class UnbalancedGrammar : public Error {
 public:
  using Error::Error;
};

class GrammarError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kMaxWordLength = 62;
inline constexpr std::size_t kDefaultWordCap = 10'000'000;

// Words over {U, D} of length <= kMaxWordLength packed into 64 bits behind a
// sentinel bit, with their multiplicities.
class WordMultiset {
 public:
  using Packed = std::uint64_t;

  static Packed pack(std::string_view word);
  static std::string unpack(Packed w);
  static std::size_t length(Packed w);

  void add(Packed w, std::uint64_t multiplicity);
  std::uint64_t multiplicity(std::string_view word) const;
  std::size_t distinct() const { return counts_.size(); }
  std::uint64_t total() const;
  const std::map<Packed, std::uint64_t>& raw() const { return counts_; }

  // Ordered by length, then lexicographically with U < D.
  std::vector<std::pair<std::string, std::uint64_t>> sorted() const;

  friend bool operator==(const WordMultiset&, const WordMultiset&) = default;

 private:
  std::map<Packed, std::uint64_t> counts_;
};

// Languages fixed from outside the grammar: each name is read as the set of
// Dyck paths satisfying the quad, produced by the enumeration oracle.
using OracleLanguages = std::map<std::string, RestrictionQuad>;

// Every word of length <= max_len derivable from start, with its number of
// distinct derivations.
WordMultiset words(const Grammar& env, const GExpr& start, std::size_t max_len,
                   const OracleLanguages& languages = {}, std::size_t cap = kDefaultWordCap);

// Number of derivation trees of word from start, by memoised substring parsing.
std::uint64_t derivation_count(const Grammar& env, const GExpr& start, std::string_view word);

struct AmbiguityReport {
  bool pass = true;
  std::size_t max_len = 0;
  std::size_t words_checked = 0;
  std::string witness;  // first word with multiplicity != 1
  std::uint64_t witness_multiplicity = 0;
};

AmbiguityReport check_unambiguous(const Grammar& env, const GExpr& start, std::size_t max_len,
                                  std::size_t cap = kDefaultWordCap);

struct EquationReport {
  bool pass = true;
  std::size_t max_len = 0;
  std::uint64_t lhs_total = 0;
  std::uint64_t rhs_total = 0;
  std::string witness;  // first word whose multiplicities differ
  std::uint64_t lhs_multiplicity = 0;
  std::uint64_t rhs_multiplicity = 0;
};

// Compares the word multisets of both sides, interpreting each nonterminal
// through the oracle language given for it.
EquationReport check_equation(const GrammaticalEquation& eq, const OracleLanguages& languages, std::size_t max_len,
                              std::size_t cap = kDefaultWordCap);

// U contributes z, D contributes 1, unions become sums and concatenation
// becomes products.
Polynomial lower(const GExpr& e);
SeriesSystem lower(const Grammar& g);
SeriesSystem lower(const GrammaticalEquation& eq);

}  // namespace dyckgram
