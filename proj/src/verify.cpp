#include "dyckgram/verify.hpp"

#include <cstdint>
#include <set>

#include "dyckgram/oracle.hpp"

namespace dyckgram {

namespace {

std::string join(const std::vector<BigInt>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ",") + x.get_str();
  return out;
}

// Equations joined with "; " so a detail stays on one line.
std::string one_line(const SeriesSystem& s) {
  std::string out;
  for (const auto& eq : s.equations) out += (out.empty() ? "" : "; ") + eq.str();
  return out;
}

CheckResult check_lowering(const FamilyInstance& f, const SeriesSystem& lowered) {
  CheckResult c{"lowering", true, one_line(lowered)};
  if (!f.expected_system) {
    c.detail = "derived only: " + one_line(lowered);
    return c;
  }
  c.pass = lowered == *f.expected_system;
  if (!c.pass) c.detail = "lowered " + one_line(lowered) + " expected " + one_line(*f.expected_system);
  return c;
}

void check_grammar_words(const FamilyInstance& f, const Grammar& g, std::size_t max_len,
                         std::vector<CheckResult>& out) {
  for (const auto& name : g.nonterminals()) {
    auto lang = f.languages.find(name);
    auto ws = words(g, nt(name), max_len);

    CheckResult amb{"unambiguous:" + name, true, std::to_string(ws.distinct()) + " words"};
    for (const auto& [w, m] : ws.raw())
      if (m != 1) {
        amb.pass = false;
        amb.detail = WordMultiset::unpack(w) + " has " + std::to_string(m) + " derivations";
        break;
      }
    out.push_back(amb);

    if (lang == f.languages.end()) continue;
    CheckResult language{"language:" + name, true, ""};
    std::set<WordMultiset::Packed> expected;
    for (std::size_t n = 0; 2 * n <= max_len; ++n)
      for (const auto& p : enumerate(n, lang->second)) expected.insert(WordMultiset::pack(p.str()));
    std::set<WordMultiset::Packed> got;
    for (const auto& [w, m] : ws.raw()) got.insert(w);
    for (auto w : got)
      if (!expected.contains(w)) {
        language.pass = false;
        language.detail = "grammar word " + WordMultiset::unpack(w) + " is not in the restricted class";
        break;
      }
    if (language.pass)
      for (auto w : expected)
        if (!got.contains(w)) {
          language.pass = false;
          language.detail = "path " + WordMultiset::unpack(w) + " is not generated";
          break;
        }
    if (language.pass) language.detail = std::to_string(got.size()) + " words up to length " + std::to_string(max_len);
    out.push_back(language);
  }
}

CheckResult check_equation_words(const FamilyInstance& f, const GrammaticalEquation& eq, std::size_t max_len) {
  auto report = check_equation(eq, {{eq.unknown, f.quad}}, max_len);
  CheckResult c{"equation", report.pass, ""};
  if (report.pass)
    c.detail = std::to_string(report.lhs_total) + " words per side up to length " + std::to_string(max_len);
  else
    c.detail = "word " + (report.witness.empty() ? std::string("eps") : report.witness) + ": lhs " +
               std::to_string(report.lhs_multiplicity) + " vs rhs " + std::to_string(report.rhs_multiplicity);
  return c;
}

CheckResult compare(const std::string& name, const std::vector<BigInt>& series, const CountTable& table) {
  CheckResult c{name, series == table.entries, ""};
  c.detail = c.pass ? join(series) : "series " + join(series) + " vs " + std::string(to_string(table.method)) + " " +
                                         join(table.entries);
  return c;
}

CheckResult check_printed_variant(const FamilyInstance& f, const TruncatedSeries& truth) {
  CheckResult c{"printed-gf", true, ""};
  const SeriesSystem& printed = *f.printed_variant;
  Solution values{{"P", truth}};
  auto residual = residuals(printed, values, truth.order()).at("P");
  // lhs - rhs of the printed form at the true series: expect exactly -1 (rhs has one surplus 1).
  TruncatedSeries surplus = TruncatedSeries::constant(truth.order(), 0) - residual;
  TruncatedSeries one = TruncatedSeries::constant(truth.order(), 1);
  c.pass = surplus == one;
  c.detail = c.pass ? "printed right-hand side exceeds the true series by exactly 1 at z^0"
                    : "surplus " + surplus.str();
  return c;
}

}  // namespace

bool FamilyReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

FamilyReport verify_family(const FamilyInstance& f, const VerifyOptions& opts) {
  FamilyReport report{f.name(), {}};
  const SeriesSystem lowered = lower(f);
  report.checks.push_back(check_lowering(f, lowered));

  if (const auto* g = std::get_if<Grammar>(&f.body))
    check_grammar_words(f, *g, opts.max_len, report.checks);
  else
    report.checks.push_back(check_equation_words(f, std::get<GrammaticalEquation>(f.body), opts.max_len));

  const TruncatedSeries p = solve(lowered, opts.n_max + 1).at("P");
  const auto coeffs = p.counts();
  report.checks.push_back(compare("gf-vs-brute", coeffs, count_brute(opts.n_max, f.quad)));
  report.checks.push_back(compare("gf-vs-dp", coeffs, count_dp(opts.n_max, f.quad)));

  if (f.printed_variant) report.checks.push_back(check_printed_variant(f, p));
  return report;
}

std::vector<FamilyReport> verify_all(const std::vector<FamilyInstance>& instances, const VerifyOptions& opts) {
  std::vector<FamilyReport> out(instances.size());
  const auto count = static_cast<std::int64_t>(instances.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = verify_family(instances[k], opts);
    } catch (const std::exception& e) {
      out[k] = FamilyReport{instances[k].name(), {{"error", false, e.what()}}};
    }
  }
  return out;
}

}  // namespace dyckgram
