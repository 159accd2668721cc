#include "dyckgram/grammar.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <set>
#include <tuple>
#include <unordered_map>

#include "dyckgram/oracle.hpp"

namespace dyckgram {

// --- Expressions ---

GExpr eps() { return GExpr(GExpr::Epsilon{}); }
GExpr up() { return GExpr(GExpr::Terminal{Step::Up}); }
GExpr down() { return GExpr(GExpr::Terminal{Step::Down}); }
GExpr nt(std::string name) { return GExpr(GExpr::NonTerminal{std::move(name)}); }
GExpr cat(std::vector<GExpr> parts) { return GExpr(GExpr::Concat{std::move(parts)}); }

GExpr power(GExpr base, unsigned k) {
  if (k == 0) return eps();
  if (k == 1) return base;
  return GExpr(GExpr::Power{std::make_shared<const GExpr>(std::move(base)), k});
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_compound(const GExpr& e) {
  const auto* c = std::get_if<GExpr::Concat>(&e.node());
  return c != nullptr && c->parts.size() > 1;
}

}  // namespace

std::string GExpr::str() const {
  return std::visit(overloaded{
                        [](const Epsilon&) -> std::string { return "eps"; },
                        [](const Terminal& t) -> std::string { return std::string(1, to_char(t.step)); },
                        [](const NonTerminal& n) -> std::string { return n.name; },
                        [](const Concat& c) -> std::string {
                          if (c.parts.empty()) return "eps";
                          std::string out;
                          for (const auto& p : c.parts) {
                            if (!out.empty()) out += ' ';
                            out += is_compound(p) ? "(" + p.str() + ")" : p.str();
                          }
                          return out;
                        },
                        [](const Power& p) -> std::string {
                          std::string base = p.base->str();
                          if (is_compound(*p.base)) base = "(" + base + ")";
                          return base + "^" + std::to_string(p.exponent);
                        },
                    },
                    node_);
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  GExpr parse() {
    GExpr e = sequence();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  GExpr sequence() {
    std::vector<GExpr> parts;
    for (;;) {
      skip();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      GExpr item = atom();
      skip();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent after '^'");
        item = power(std::move(item), static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
      }
      parts.push_back(std::move(item));
    }
    if (parts.empty()) return eps();
    if (parts.size() == 1) return std::move(parts.front());
    return cat(std::move(parts));
  }

  GExpr atom() {
    if (text_[pos_] == '(') {
      ++pos_;
      GExpr inner = sequence();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    std::string word(text_.substr(start, pos_ - start));
    if (word == "U") return up();
    if (word == "D") return down();
    if (word == "eps") return eps();
    return nt(word);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw GrammarError("grammar expression, offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GExpr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

// --- Grammar ---

Grammar& Grammar::declare(const std::string& name) {
  if (rules_.try_emplace(name).second) order_.push_back(name);
  return *this;
}

Grammar& Grammar::rule(const std::string& name, GExpr alternative) {
  declare(name);
  rules_[name].push_back(std::move(alternative));
  return *this;
}

const std::vector<GExpr>& Grammar::alternatives(const std::string& name) const {
  auto it = rules_.find(name);
  if (it == rules_.end()) throw GrammarError("undefined nonterminal " + name);
  return it->second;
}

const std::string& Grammar::start() const {
  if (order_.empty()) throw GrammarError("grammar has no nonterminals");
  return order_.front();
}

std::string Grammar::str() const {
  std::string out;
  for (const auto& name : order_)
    for (const auto& alt : rules_.at(name)) out += name + " -> " + alt.str() + "\n";
  return out;
}

Grammar parse_grammar(std::string_view text) {
  Grammar g;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw GrammarError("line " + std::to_string(line_no) + ": expected '->'");
    std::string name(line.substr(0, arrow));
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty() || name == "U" || name == "D" || name == "eps")
      throw GrammarError("line " + std::to_string(line_no) + ": bad nonterminal name '" + name + "'");
    std::string_view body = line.substr(arrow + 2);
    std::size_t bar;
    while ((bar = body.find('|')) != std::string_view::npos) {
      g.rule(name, parse_expr(body.substr(0, bar)));
      body = body.substr(bar + 1);
    }
    g.rule(name, parse_expr(body));
  }
  return g;
}

std::string GrammaticalEquation::str() const {
  auto side = [](const std::vector<GExpr>& alts) {
    std::string out;
    for (const auto& a : alts) out += (out.empty() ? "" : " | ") + a.str();
    return out;
  };
  return side(lhs) + " == " + side(rhs);
}

// --- Words ---

WordMultiset::Packed WordMultiset::pack(std::string_view word) {
  if (word.size() > kMaxWordLength) throw ResourceLimit("word longer than " + std::to_string(kMaxWordLength));
  Packed v = 1;
  for (char c : word) {
    if (c != 'U' && c != 'D') throw Error("invalid step character '" + std::string(1, c) + "'");
    v = (v << 1U) | (c == 'D' ? 1U : 0U);
  }
  return v;
}

std::size_t WordMultiset::length(Packed w) { return static_cast<std::size_t>(std::bit_width(w)) - 1; }

std::string WordMultiset::unpack(Packed w) {
  std::size_t n = length(w);
  std::string out(n, 'U');
  for (std::size_t i = 0; i < n; ++i)
    if ((w >> (n - 1 - i)) & 1U) out[i] = 'D';
  return out;
}

void WordMultiset::add(Packed w, std::uint64_t multiplicity) {
  if (multiplicity == 0) return;
  auto& slot = counts_[w];
  if (__builtin_add_overflow(slot, multiplicity, &slot)) throw ResourceLimit("word multiplicity overflow");
}

std::uint64_t WordMultiset::multiplicity(std::string_view word) const {
  auto it = counts_.find(pack(word));
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t WordMultiset::total() const {
  std::uint64_t t = 0;
  for (const auto& [w, m] : counts_) t += m;
  return t;
}

std::vector<std::pair<std::string, std::uint64_t>> WordMultiset::sorted() const {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  out.reserve(counts_.size());
  // The sentinel bit makes numeric order length-major, then U < D.
  for (const auto& [w, m] : counts_) out.emplace_back(unpack(w), m);
  return out;
}

namespace {

using Packed = WordMultiset::Packed;
constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max() / 4;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimit("derivation count overflow");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceLimit("derivation count overflow");
  return r;
}

Packed concat(Packed a, Packed b) {
  std::size_t lb = WordMultiset::length(b);
  return (a << lb) | (b ^ (Packed{1} << lb));
}

// Flattened factor list of an expression: nested concatenations are inlined
// and powers unrolled.
void flatten(const GExpr& e, std::vector<const GExpr*>& out) {
  if (const auto* c = std::get_if<GExpr::Concat>(&e.node())) {
    for (const auto& p : c->parts) flatten(p, out);
  } else if (const auto* p = std::get_if<GExpr::Power>(&e.node())) {
    for (unsigned i = 0; i < p->exponent; ++i) flatten(*p->base, out);
  } else if (!std::holds_alternative<GExpr::Epsilon>(e.node())) {
    out.push_back(&e);
  }
}

// Shortest derivable word length per nonterminal (kInfinite when none).
class MinLengths {
 public:
  MinLengths(const Grammar& env, const OracleLanguages& languages) {
    for (const auto& [name, quad] : languages) min_[name] = 0;
    for (const auto& name : env.nonterminals())
      if (!languages.contains(name)) min_[name] = kInfinite;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& name : env.nonterminals()) {
        if (languages.contains(name)) continue;
        std::size_t best = min_[name];
        for (const auto& alt : env.alternatives(name)) best = std::min(best, of(alt));
        if (best < min_[name]) {
          min_[name] = best;
          changed = true;
        }
      }
    }
  }

  std::size_t of(const GExpr& e) const {
    return std::visit(overloaded{
                          [](const GExpr::Epsilon&) -> std::size_t { return 0; },
                          [](const GExpr::Terminal&) -> std::size_t { return 1; },
                          [this](const GExpr::NonTerminal& n) -> std::size_t {
                            auto it = min_.find(n.name);
                            if (it == min_.end()) throw GrammarError("undefined nonterminal " + n.name);
                            return it->second;
                          },
                          [this](const GExpr::Concat& c) -> std::size_t {
                            std::size_t s = 0;
                            for (const auto& p : c.parts) s = std::min(kInfinite, s + of(p));
                            return s;
                          },
                          [this](const GExpr::Power& p) -> std::size_t {
                            return std::min(kInfinite, of(*p.base) * p.exponent);
                          },
                      },
                      e.node());
  }

 private:
  std::map<std::string, std::size_t> min_;
};

// Length-indexed memoised expansion of nonterminals into word multisets.
class Expander {
 public:
  using Bucket = std::unordered_map<Packed, std::uint64_t>;

  Expander(const Grammar& env, const OracleLanguages& languages, std::size_t cap)
      : env_(env), languages_(languages), mins_(env, languages), cap_(cap) {}

  // Words of exactly `len` steps derivable from e.
  Bucket expand(const GExpr& e, std::size_t len) {
    std::vector<const GExpr*> factors;
    flatten(e, factors);
    return sequence(factors, len);
  }

 private:
  const Bucket& nonterminal(const std::string& name, std::size_t len) {
    auto key = std::make_pair(name, len);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!in_progress_.insert(key).second)
      throw GrammarError("nonterminal " + name + " derives itself without consuming input (infinitely ambiguous)");
    Bucket out;
    if (auto lang = languages_.find(name); lang != languages_.end()) {
      if (len % 2 == 0)
        for (const auto& path : enumerate(len / 2, lang->second)) out.emplace(WordMultiset::pack(path.str()), 1);
    } else {
      for (const auto& alt : env_.alternatives(name))
        for (const auto& [w, m] : expand(alt, len)) out[w] = checked_add(out[w], m);
    }
    stored_ += out.size();
    if (stored_ > cap_) throw ResourceLimit("word expansion exceeded " + std::to_string(cap_) + " stored words");
    in_progress_.erase(key);
    return memo_.emplace(key, std::move(out)).first->second;
  }

  const Bucket& factor(const GExpr& e, std::size_t len, Bucket& scratch) {
    if (const auto* n = std::get_if<GExpr::NonTerminal>(&e.node())) return nonterminal(n->name, len);
    const auto& t = std::get<GExpr::Terminal>(e.node());
    scratch.clear();
    if (len == 1) scratch.emplace(t.step == Step::Up ? Packed{0b10} : Packed{0b11}, 1);
    return scratch;
  }

  Bucket sequence(const std::vector<const GExpr*>& factors, std::size_t len) {
    const std::size_t k = factors.size();
    std::vector<std::size_t> mins(k), tail(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) mins[i] = mins_.of(*factors[i]);
    for (std::size_t i = k; i-- > 0;) tail[i] = std::min(kInfinite, tail[i + 1] + mins[i]);
    if (tail[0] > len) return {};

    std::vector<Bucket> acc(len + 1);
    acc[0].emplace(Packed{1}, 1);
    Bucket scratch;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Bucket> next(len + 1);
      const std::size_t limit = len - tail[i + 1];
      for (std::size_t a = 0; a <= limit; ++a) {
        if (acc[a].empty()) continue;
        std::size_t lo = a + mins[i];
        std::size_t hi = i + 1 == k ? len : limit;
        if (i + 1 == k) lo = std::max(lo, len);
        for (std::size_t total = lo; total <= hi; ++total) {
          const Bucket& part = factor(*factors[i], total - a, scratch);
          if (part.empty()) continue;
          Bucket& dst = next[total];
          for (const auto& [wa, ma] : acc[a])
            for (const auto& [wb, mb] : part) {
              auto& slot = dst[concat(wa, wb)];
              slot = checked_add(slot, checked_mul(ma, mb));
            }
        }
      }
      acc = std::move(next);
    }
    return std::move(acc[len]);
  }

  const Grammar& env_;
  const OracleLanguages& languages_;
  MinLengths mins_;
  std::size_t cap_;
  std::size_t stored_ = 0;
  std::map<std::pair<std::string, std::size_t>, Bucket> memo_;
  std::set<std::pair<std::string, std::size_t>> in_progress_;
};

WordMultiset collect(Expander& ex, const std::vector<GExpr>& alternatives, std::size_t max_len) {
  WordMultiset out;
  for (std::size_t len = 0; len <= max_len; ++len)
    for (const auto& alt : alternatives)
      for (const auto& [w, m] : ex.expand(alt, len)) out.add(w, m);
  return out;
}

void check_length(std::size_t max_len) {
  if (max_len > kMaxWordLength)
    throw ResourceLimit("word length bound " + std::to_string(max_len) + " exceeds " + std::to_string(kMaxWordLength));
}

}  // namespace

WordMultiset words(const Grammar& env, const GExpr& start, std::size_t max_len, const OracleLanguages& languages,
                   std::size_t cap) {
  check_length(max_len);
  Expander ex(env, languages, cap);
  return collect(ex, {start}, max_len);
}

namespace {

// Counts parse trees of a fixed word over all substrings [i, j).
class DerivationCounter {
 public:
  DerivationCounter(const Grammar& env, std::string_view word) : env_(env), word_(word), mins_(env, {}) {}

  std::uint64_t count(const GExpr& e, std::size_t i, std::size_t j) {
    if (const auto* n = std::get_if<GExpr::NonTerminal>(&e.node())) return nonterminal(n->name, i, j);
    if (const auto* t = std::get_if<GExpr::Terminal>(&e.node()))
      return j == i + 1 && word_[i] == to_char(t->step) ? 1 : 0;
    if (std::holds_alternative<GExpr::Epsilon>(e.node())) return i == j ? 1 : 0;
    auto [it, fresh] = flat_.try_emplace(&e);
    if (fresh) flatten(e, it->second);
    return sequence(&e, it->second, 0, i, j);
  }

 private:
  std::uint64_t nonterminal(const std::string& name, std::size_t i, std::size_t j) {
    auto key = std::make_tuple(name, i, j);
    if (auto it = nt_memo_.find(key); it != nt_memo_.end()) return it->second;
    if (!in_progress_.insert(key).second)
      throw GrammarError("nonterminal " + name + " derives itself without consuming input (infinitely ambiguous)");
    std::uint64_t total = 0;
    for (const auto& alt : env_.alternatives(name)) total = checked_add(total, count(alt, i, j));
    in_progress_.erase(key);
    nt_memo_.emplace(key, total);
    return total;
  }

  std::uint64_t sequence(const GExpr* owner, const std::vector<const GExpr*>& factors, std::size_t idx, std::size_t i,
                         std::size_t j) {
    if (idx == factors.size()) return i == j ? 1 : 0;
    auto key = std::make_tuple(owner, idx, i, j);
    if (auto it = seq_memo_.find(key); it != seq_memo_.end()) return it->second;
    std::size_t rest = 0;
    for (std::size_t f = idx + 1; f < factors.size(); ++f) rest = std::min(kInfinite, rest + mins_.of(*factors[f]));
    std::uint64_t total = 0;
    if (j - i >= rest) {
      const std::size_t first_min = mins_.of(*factors[idx]);
      for (std::size_t m = i + std::min(first_min, j - i); m + rest <= j; ++m) {
        if (idx + 1 == factors.size() && m != j) continue;
        std::uint64_t head = count(*factors[idx], i, m);
        if (head == 0) continue;
        total = checked_add(total, checked_mul(head, sequence(owner, factors, idx + 1, m, j)));
      }
    }
    seq_memo_.emplace(key, total);
    return total;
  }

  const Grammar& env_;
  std::string_view word_;
  MinLengths mins_;
  std::map<const GExpr*, std::vector<const GExpr*>> flat_;
  std::map<std::tuple<std::string, std::size_t, std::size_t>, std::uint64_t> nt_memo_;
  std::set<std::tuple<std::string, std::size_t, std::size_t>> in_progress_;
  std::map<std::tuple<const GExpr*, std::size_t, std::size_t, std::size_t>, std::uint64_t> seq_memo_;
};

}  // namespace

std::uint64_t derivation_count(const Grammar& env, const GExpr& start, std::string_view word) {
  for (char c : word)
    if (c != 'U' && c != 'D') return 0;
  DerivationCounter counter(env, word);
  return counter.count(start, 0, word.size());
}

AmbiguityReport check_unambiguous(const Grammar& env, const GExpr& start, std::size_t max_len, std::size_t cap) {
  AmbiguityReport report;
  report.max_len = max_len;
  auto ws = words(env, start, max_len, {}, cap);
  report.words_checked = ws.distinct();
  for (const auto& [w, m] : ws.raw()) {
    if (m != 1) {
      report.pass = false;
      report.witness = WordMultiset::unpack(w);
      report.witness_multiplicity = m;
      break;
    }
  }
  return report;
}

EquationReport check_equation(const GrammaticalEquation& eq, const OracleLanguages& languages, std::size_t max_len,
                              std::size_t cap) {
  check_length(max_len);
  EquationReport report;
  report.max_len = max_len;
  Expander ex(eq.env, languages, cap);
  WordMultiset lhs = collect(ex, eq.lhs, max_len);
  WordMultiset rhs = collect(ex, eq.rhs, max_len);
  report.lhs_total = lhs.total();
  report.rhs_total = rhs.total();
  // Walk the union of both key sets in order and stop at the first disagreement.
  auto a = lhs.raw().begin(), b = rhs.raw().begin();
  while (a != lhs.raw().end() || b != rhs.raw().end()) {
    Packed w;
    std::uint64_t ml = 0, mr = 0;
    if (b == rhs.raw().end() || (a != lhs.raw().end() && a->first < b->first)) {
      w = a->first;
      ml = (a++)->second;
    } else if (a == lhs.raw().end() || b->first < a->first) {
      w = b->first;
      mr = (b++)->second;
    } else {
      w = a->first;
      ml = (a++)->second;
      mr = (b++)->second;
    }
    if (ml != mr) {
      report.pass = false;
      report.witness = WordMultiset::unpack(w);
      report.lhs_multiplicity = ml;
      report.rhs_multiplicity = mr;
      break;
    }
  }
  return report;
}

// --- Lowering ---

namespace {

long balance(const GExpr& e) {
  return std::visit(overloaded{
                        [](const GExpr::Epsilon&) -> long { return 0; },
                        [](const GExpr::Terminal& t) -> long { return t.step == Step::Up ? 1 : -1; },
                        [](const GExpr::NonTerminal&) -> long { return 0; },
                        [](const GExpr::Concat& c) -> long {
                          long s = 0;
                          for (const auto& p : c.parts) s += balance(p);
                          return s;
                        },
                        [](const GExpr::Power& p) -> long { return balance(*p.base) * p.exponent; },
                    },
                    e.node());
}

Polynomial lower_union(const std::vector<GExpr>& alternatives, const std::string& owner) {
  Polynomial sum;
  for (const auto& alt : alternatives) {
    if (long b = balance(alt); b != 0)
      throw UnbalancedGrammar("alternative '" + alt.str() + "' of " + owner + " has U-D excess " + std::to_string(b));
    sum += lower(alt);
  }
  return sum;
}

}  // namespace

Polynomial lower(const GExpr& e) {
  return std::visit(overloaded{
                        [](const GExpr::Epsilon&) { return Polynomial::constant(1); },
                        [](const GExpr::Terminal& t) {
                          return t.step == Step::Up ? Polynomial::z_power(1) : Polynomial::constant(1);
                        },
                        [](const GExpr::NonTerminal& n) { return Polynomial::unknown(n.name); },
                        [](const GExpr::Concat& c) {
                          Polynomial prod = Polynomial::constant(1);
                          for (const auto& p : c.parts) prod = prod * lower(p);
                          return prod;
                        },
                        [](const GExpr::Power& p) { return pow(lower(*p.base), p.exponent); },
                    },
                    e.node());
}

SeriesSystem lower(const Grammar& g) {
  SeriesSystem sys;
  for (const auto& name : g.nonterminals())
    sys.equations.push_back({name, Polynomial::unknown(name), lower_union(g.alternatives(name), name)});
  return sys;
}

SeriesSystem lower(const GrammaticalEquation& eq) {
  SeriesSystem sys;
  sys.equations.push_back({eq.unknown, lower_union(eq.lhs, eq.unknown), lower_union(eq.rhs, eq.unknown)});
  for (const auto& name : eq.env.nonterminals()) {
    if (name == eq.unknown || eq.env.alternatives(name).empty()) continue;
    sys.equations.push_back({name, Polynomial::unknown(name), lower_union(eq.env.alternatives(name), name)});
  }
  return sys;
}

}  // namespace dyckgram
