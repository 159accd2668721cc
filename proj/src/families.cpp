#include "dyckgram/families.hpp"

#include <charconv>

namespace dyckgram {

namespace {

// Shorthand builders for the families below.
GExpr U(unsigned k = 1) { return power(up(), k); }
GExpr D(unsigned k = 1) { return power(down(), k); }
GExpr P() { return nt("P"); }
// Concatenation with epsilon factors (e.g. U^0) dropped.
GExpr seq(std::initializer_list<GExpr> parts) {
  std::vector<GExpr> kept;
  for (const auto& p : parts)
    if (!std::holds_alternative<GExpr::Epsilon>(p.node())) kept.push_back(p);
  if (kept.empty()) return eps();
  if (kept.size() == 1) return kept.front();
  return cat(std::move(kept));
}

Polynomial z(std::size_t k) { return Polynomial::z_power(k); }
Polynomial one() { return Polynomial::constant(1); }
Polynomial var(const std::string& name) { return Polynomial::unknown(name); }
Polynomial zP(std::size_t zdeg, unsigned pdeg) { return z(zdeg) * pow(var("P"), pdeg); }

SeriesSystem single(Polynomial lhs, Polynomial rhs) { return SeriesSystem{{{"P", std::move(lhs), std::move(rhs)}}}; }

long param(const FamilyParams& params, FamilyId id, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw BadParams(std::string(to_string(id)) + " needs parameter " + key);
  return it->second;
}

void require(bool ok, FamilyId id, const FamilyParams& params, const std::string& constraint) {
  if (!ok)
    throw BadParams(std::string(to_string(id)) + " with " + to_string(params) + " violates " + constraint);
}

void expect_keys(FamilyId id, const FamilyParams& params, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : params) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw BadParams(std::string(to_string(id)) + " has no parameter " + k);
  }
}

// Up-run AP families: U^k (D P)^k for the short initial runs, U^A (P D)^A P.
GExpr short_up_case(unsigned k) { return seq({U(k), power(seq({D(), P()}), k)}); }
GExpr long_up_case(unsigned a) { return seq({U(a), power(seq({P(), D()}), a), P()}); }

// Down-run AP families: (U P)^(k-1) U D^k P and (U P)^A D^A P.
GExpr short_down_case(unsigned k) { return seq({power(seq({U(), P()}), k - 1), U(), D(k), P()}); }
GExpr long_down_case(unsigned a) { return seq({power(seq({U(), P()}), a), D(a), P()}); }

FamilyInstance f1() {
  FamilyInstance f{FamilyId::F1, {}, {}, {}, Grammar{}, {}, {}};
  f.quad.peaks = IntSet::progression(2, 3);
  f.quad.up_runs = IntSet::from(3);
  Grammar g;
  g.rule("P", eps()).rule("P", seq({U(), D(), P()})).rule("P", seq({U(), U(), D(), nt("Q"), D(), P()}));
  g.rule("Q", eps()).rule("Q", seq({U(), D(), nt("Q")}));
  f.body = g;
  f.languages["Q"] = {IntSet::progression(2, 2), {}, IntSet::from(3), {}};
  f.expected_system = SeriesSystem{{
      {"P", var("P"), one() + z(1) * var("P") + z(2) * var("Q") * var("P")},
      {"Q", var("Q"), one() + z(1) * var("Q")},
  }};
  return f;
}

FamilyInstance f2() {
  FamilyInstance f{FamilyId::F2, {}, {}, {}, Grammar{}, {}, {}};
  f.quad.peaks = IntSet::progression(2, 3);
  f.quad.up_runs = IntSet::from(4);
  auto O = nt("O");
  auto E = nt("E");
  Grammar g;
  g.rule("P", eps()).rule("P", seq({U(), D(), P()})).rule("P", seq({U(), U(), D(), O, D(), P()}));
  g.rule("O", eps()).rule("O", seq({U(), D(), O})).rule("O", seq({U(), U(), U(), D(), O, D(), E, D(), O}));
  g.rule("E", eps()).rule("E", seq({U(), U(), D(), O, D(), E}));
  f.body = g;
  f.languages["O"] = {IntSet::progression(2, 2), {}, IntSet::from(4), {}};
  f.languages["E"] = {IntSet::progression(2, 1), {}, IntSet::from(4), {}};
  f.expected_system = SeriesSystem{{
      {"P", var("P"), one() + z(1) * var("P") + z(2) * var("O") * var("P")},
      {"O", var("O"), one() + z(1) * var("O") + z(3) * var("E") * pow(var("O"), 2)},
      {"E", var("E"), one() + z(2) * var("O") * var("E")},
  }};
  return f;
}

FamilyInstance f3() {
  FamilyInstance f{FamilyId::F3, {}, {}, {}, Grammar{}, {}, {}};
  f.quad.up_runs = IntSet::from(3);
  Grammar g;
  g.rule("P", eps()).rule("P", seq({U(), U(), D(), P(), D(), P()})).rule("P", seq({U(), D(), P()}));
  f.body = g;
  f.expected_system = single(var("P"), one() + zP(1, 1) + zP(2, 2));
  return f;
}

FamilyInstance f5(long a, long b) {
  FamilyInstance f{FamilyId::F5, {{"A", a}, {"B", b}}, {}, {}, Grammar{}, {}, {}};
  require(1 <= b && b < a, f.id, f.params, "1 <= B < A");
  f.quad.up_runs = IntSet::progression(a, b);
  Grammar g;
  Polynomial rhs;
  for (long k = 0; k < a; ++k) {
    if (k == b) continue;
    g.rule("P", short_up_case(static_cast<unsigned>(k)));
    rhs += zP(static_cast<std::size_t>(k), static_cast<unsigned>(k));
  }
  g.rule("P", long_up_case(static_cast<unsigned>(a)));
  rhs += zP(static_cast<std::size_t>(a), static_cast<unsigned>(a + 1));
  f.body = g;
  f.expected_system = single(var("P"), rhs);
  return f;
}

FamilyInstance f6(long a, long b) {
  FamilyInstance f{FamilyId::F6, {{"A", a}, {"B", b}}, {}, {}, Grammar{}, {}, {}};
  require(1 <= a && a <= b, f.id, f.params, "1 <= A <= B");
  f.quad.up_runs = IntSet::progression(a, b);
  GrammaticalEquation eq;
  eq.env.declare("P");
  eq.lhs = {P(), short_up_case(static_cast<unsigned>(b))};
  Polynomial rhs;
  for (long k = 0; k < a; ++k) {
    eq.rhs.push_back(short_up_case(static_cast<unsigned>(k)));
    rhs += zP(static_cast<std::size_t>(k), static_cast<unsigned>(k));
  }
  eq.rhs.push_back(long_up_case(static_cast<unsigned>(a)));
  rhs += zP(static_cast<std::size_t>(a), static_cast<unsigned>(a + 1));
  f.body = eq;
  f.expected_system = single(var("P") + zP(static_cast<std::size_t>(b), static_cast<unsigned>(b)), rhs);
  return f;
}

FamilyInstance f7(long a, long b) {
  FamilyInstance f{FamilyId::F7, {{"A", a}, {"B", b}}, {}, {}, Grammar{}, {}, {}};
  require(1 <= b && b < a, f.id, f.params, "1 <= B < A");
  f.quad.down_runs = IntSet::progression(a, b);
  Grammar g;
  g.rule("P", eps());
  Polynomial from_grammar = one();
  Polynomial printed = one();
  for (long k = 0; k < a; ++k) {
    if (k == b) continue;
    printed += zP(static_cast<std::size_t>(k), static_cast<unsigned>(k));
    if (k == 0) continue;
    g.rule("P", short_down_case(static_cast<unsigned>(k)));
    from_grammar += zP(static_cast<std::size_t>(k), static_cast<unsigned>(k));
  }
  g.rule("P", long_down_case(static_cast<unsigned>(a)));
  from_grammar += zP(static_cast<std::size_t>(a), static_cast<unsigned>(a + 1));
  printed += zP(static_cast<std::size_t>(a), static_cast<unsigned>(a + 1));
  f.body = g;
  f.expected_system = single(var("P"), from_grammar);
  f.printed_variant = single(var("P"), printed);
  return f;
}

FamilyInstance f8(long a, long b) {
  FamilyInstance f{FamilyId::F8, {{"A", a}, {"B", b}}, {}, {}, Grammar{}, {}, {}};
  require(1 <= a && a <= b, f.id, f.params, "1 <= A <= B");
  f.quad.down_runs = IntSet::progression(a, b);
  GrammaticalEquation eq;
  eq.env.declare("P");
  eq.lhs = {P(), short_down_case(static_cast<unsigned>(b))};
  eq.rhs.push_back(eps());
  Polynomial from_equation = one();
  Polynomial printed = one();
  for (long k = 0; k < a; ++k) {
    printed += zP(static_cast<std::size_t>(k), static_cast<unsigned>(k));
    if (k == 0) continue;
    eq.rhs.push_back(short_down_case(static_cast<unsigned>(k)));
    from_equation += zP(static_cast<std::size_t>(k), static_cast<unsigned>(k));
  }
  eq.rhs.push_back(long_down_case(static_cast<unsigned>(a)));
  from_equation += zP(static_cast<std::size_t>(a), static_cast<unsigned>(a + 1));
  printed += zP(static_cast<std::size_t>(a), static_cast<unsigned>(a + 1));
  f.body = eq;
  const Polynomial lhs = var("P") + zP(static_cast<std::size_t>(b), static_cast<unsigned>(b));
  f.expected_system = single(lhs, from_equation);
  f.printed_variant = single(var("P") + zP(static_cast<std::size_t>(b), static_cast<unsigned>(b)), printed);
  return f;
}

FamilyInstance f9(long r) {
  FamilyInstance f{FamilyId::F9, {{"r", r}}, {}, {}, Grammar{}, {}, {}};
  require(r >= 1, f.id, f.params, "r >= 1");
  f.quad.up_runs = IntSet::range(1, r);
  f.quad.down_runs = IntSet::range(1, r);
  const auto r1 = static_cast<unsigned>(r + 1);
  GrammaticalEquation eq;
  eq.env.declare("P");
  eq.lhs = {P(), seq({U(), D(), P()})};
  eq.rhs = {eps(), seq({U(r1), D(r1), P()}), seq({U(), P(), D(), P()})};
  f.body = eq;
  f.expected_system = single(var("P") + zP(1, 1), one() + zP(r1, 1) + zP(1, 2));
  return f;
}

FamilyInstance f10(long m, long n) {
  FamilyInstance f{FamilyId::F10, {{"m", m}, {"n", n}}, {}, {}, Grammar{}, {}, {}};
  require(m >= 1 && n >= 1, f.id, f.params, "m, n >= 1");
  f.quad.up_runs = IntSet::range(1, m);
  f.quad.down_runs = IntSet::range(1, n);
  const auto um = static_cast<unsigned>(m + 1);
  const auto dn = static_cast<unsigned>(n + 1);
  GrammaticalEquation eq;
  eq.env.declare("P");
  eq.lhs = {P(), seq({U(), D(), P()})};
  eq.rhs = {eps(), seq({U(), P(), D(), P()})};
  if (m >= n)
    eq.rhs.push_back(seq({U(um), D(dn), power(seq({P(), D()}), static_cast<unsigned>(m - n)), P()}));
  else
    eq.rhs.push_back(seq({power(seq({U(), P()}), static_cast<unsigned>(n - m)), U(um), D(dn), P()}));
  f.body = eq;
  return f;
}

FamilyInstance f11(long r, long k) {
  FamilyInstance f{FamilyId::F11, {{"r", r}, {"k", k}}, {}, {}, Grammar{}, {}, {}};
  require(1 <= k && k <= r, f.id, f.params, "1 <= k <= r");
  f.quad.up_runs = IntSet::range(1, r);
  if (k < r) f.quad.down_runs = IntSet::range(k + 1, r);
  const auto r1 = static_cast<unsigned>(r + 1);
  GrammaticalEquation eq;
  eq.env.declare("P");
  eq.lhs = {P(), seq({U(), D(), P()}),
            seq({U(r1), D(static_cast<unsigned>(k)), power(seq({D(), P()}), static_cast<unsigned>(r + 1 - k))})};
  eq.rhs = {eps(), seq({U(), P(), D(), P()}), seq({U(r1), D(r1), P()}), seq({U(r1), power(seq({D(), P()}), r1)})};
  f.body = eq;
  return f;
}

}  // namespace

std::string_view to_string(FamilyId id) {
  switch (id) {
    case FamilyId::F1: return "F1";
    case FamilyId::F2: return "F2";
    case FamilyId::F3: return "F3";
    case FamilyId::F5: return "F5";
    case FamilyId::F6: return "F6";
    case FamilyId::F7: return "F7";
    case FamilyId::F8: return "F8";
    case FamilyId::F9: return "F9";
    case FamilyId::F10: return "F10";
    case FamilyId::F11: return "F11";
  }
  return "?";
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids{FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F5, FamilyId::F6,
                                         FamilyId::F7, FamilyId::F8, FamilyId::F9, FamilyId::F10, FamilyId::F11};
  return ids;
}

FamilyId parse_family_id(std::string_view text) {
  for (FamilyId id : all_families())
    if (to_string(id) == text) return id;
  throw BadParams("unknown family '" + std::string(text) + "'");
}

FamilyParams parse_params(std::string_view text) {
  FamilyParams out;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) throw BadParams("expected NAME=VALUE, got '" + std::string(item) + "'");
    long value = 0;
    auto digits = item.substr(eq + 1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
      throw BadParams("bad integer in '" + std::string(item) + "'");
    out[std::string(item.substr(0, eq))] = value;
  }
  return out;
}

std::string to_string(const FamilyParams& params) {
  std::string out;
  for (const auto& [k, v] : params) out += (out.empty() ? "" : ",") + k + "=" + std::to_string(v);
  return out;
}

std::string FamilyInstance::name() const {
  std::string out(to_string(id));
  if (!params.empty()) out += "(" + to_string(params) + ")";
  return out;
}

namespace {

FamilyInstance dispatch(FamilyId id, const FamilyParams& params) {
  switch (id) {
    case FamilyId::F1: expect_keys(id, params, {}); return f1();
    case FamilyId::F2: expect_keys(id, params, {}); return f2();
    case FamilyId::F3: expect_keys(id, params, {}); return f3();
    case FamilyId::F5:
      expect_keys(id, params, {"A", "B"});
      return f5(param(params, id, "A"), param(params, id, "B"));
    case FamilyId::F6:
      expect_keys(id, params, {"A", "B"});
      return f6(param(params, id, "A"), param(params, id, "B"));
    case FamilyId::F7:
      expect_keys(id, params, {"A", "B"});
      return f7(param(params, id, "A"), param(params, id, "B"));
    case FamilyId::F8:
      expect_keys(id, params, {"A", "B"});
      return f8(param(params, id, "A"), param(params, id, "B"));
    case FamilyId::F9: expect_keys(id, params, {"r"}); return f9(param(params, id, "r"));
    case FamilyId::F10:
      expect_keys(id, params, {"m", "n"});
      return f10(param(params, id, "m"), param(params, id, "n"));
    case FamilyId::F11:
      expect_keys(id, params, {"r", "k"});
      return f11(param(params, id, "r"), param(params, id, "k"));
  }
  throw BadParams("unknown family");
}

}  // namespace

FamilyInstance build(FamilyId id, const FamilyParams& params) {
  FamilyInstance f = dispatch(id, params);
  f.languages["P"] = f.quad;
  return f;
}

std::vector<FamilyParams> sweep_params(FamilyId id, long max_a, long max_b, long max_r) {
  std::vector<FamilyParams> out;
  switch (id) {
    case FamilyId::F1:
    case FamilyId::F2:
    case FamilyId::F3: out.push_back({}); break;
    case FamilyId::F5:
    case FamilyId::F7:
      for (long a = 1; a <= max_a; ++a)
        for (long b = 1; b < a && b <= max_b; ++b) out.push_back({{"A", a}, {"B", b}});
      break;
    case FamilyId::F6:
    case FamilyId::F8:
      for (long a = 1; a <= max_a; ++a)
        for (long b = a; b <= max_b; ++b) out.push_back({{"A", a}, {"B", b}});
      break;
    case FamilyId::F9:
      for (long r = 1; r <= max_r; ++r) out.push_back({{"r", r}});
      break;
    case FamilyId::F10:
      for (long m = 1; m <= max_r; ++m)
        for (long n = 1; n <= max_r; ++n) out.push_back({{"m", m}, {"n", n}});
      break;
    case FamilyId::F11:
      for (long r = 1; r <= max_r; ++r)
        for (long k = 1; k <= r; ++k) out.push_back({{"r", r}, {"k", k}});
      break;
  }
  return out;
}

SeriesSystem lower(const FamilyInstance& f) {
  return std::visit([](const auto& body) { return lower(body); }, f.body);
}

std::string dump_body(const FamilyInstance& f) {
  if (const auto* g = std::get_if<Grammar>(&f.body)) return g->str();
  const auto& eq = std::get<GrammaticalEquation>(f.body);
  std::string out;
  for (const auto& e : eq.lhs) out += "lhs: " + e.str() + "\n";
  for (const auto& e : eq.rhs) out += "rhs: " + e.str() + "\n";
  return out;
}

}  // namespace dyckgram
