// End-to-end acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "dyckgram/bijection.hpp"
#include "dyckgram/families.hpp"
#include "dyckgram/grammar.hpp"
#include "dyckgram/oracle.hpp"
#include "dyckgram/sequences.hpp"
#include "dyckgram/verify.hpp"

using namespace dyckgram;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0) {
    std::ostringstream lim;
    lim << "took " << secs << " s, limit " << limit_s << " s";
    o.require(secs < limit_s, lim.str());
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", secs);
  std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ": " << title << " (" << timing << ")";
  if (!o.pass) std::cout << " -- " << o.note;
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

std::vector<BigInt> solved_counts(const FamilyInstance& f, std::size_t count) {
  return solve(lower(f), count).at("P").counts();
}

void all_oracles_agree(Outcome& o, const FamilyInstance& f, std::size_t n_max, const std::vector<BigInt>& expected) {
  auto brute = count_brute(n_max, f.quad).entries;
  auto dp = count_dp(n_max, f.quad).entries;
  auto gf = solved_counts(f, n_max + 1);
  o.require(brute == expected, f.name() + ": brute force differs from the expected sequence");
  o.require(dp == expected, f.name() + ": DP differs from the expected sequence");
  o.require(gf == expected, f.name() + ": solved series differs from the expected sequence");
}

void sweep(Outcome& o, const std::vector<FamilyId>& ids) {
  std::vector<FamilyInstance> instances;
  for (auto id : ids)
    for (const auto& p : sweep_params(id, 4, 6, 4)) instances.push_back(build(id, p));
  auto reports = verify_all(instances, {20, 10});
  for (const auto& r : reports)
    for (const auto& c : r.checks) o.require(c.pass, r.family + " " + c.name + ": " + c.detail);
}

IntSet random_set(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<long> small(1, 4);
  IntSet s;
  int atoms = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int i = 0; i < atoms; ++i) {
    switch (kind(rng)) {
      case 0: s.add(IntSet::Single{small(rng)}); break;
      case 1: {
        long lo = small(rng);
        s.add(IntSet::Range{lo, lo + small(rng) - 1});
        break;
      }
      case 2: s.add(IntSet::Progression{small(rng) + 1, small(rng)}); break;
      case 3: s.add(IntSet::Progression{1, small(rng) + 2}); break;
      default: break;
    }
  }
  return s;
}

}  // namespace

int main() {
  criterion(1, "F1 counts are 1, 2^(n-1) by brute force, DP and series, n <= 14", 10, [](Outcome& o) {
    std::vector<BigInt> expected{1};
    for (std::size_t n = 1; n <= 14; ++n) expected.push_back(BigInt(1) << (n - 1));
    all_oracles_agree(o, build(FamilyId::F1), 14, expected);
  });

  criterion(2, "F2 counts are G(n+1); radical form and G = zP + 1 hold to order 30", 10, [](Outcome& o) {
    auto f = build(FamilyId::F2);
    auto g = reference_prefix(SeqId::GenCatalan, 16);
    all_oracles_agree(o, f, 14, std::vector<BigInt>(g.begin() + 1, g.begin() + 16));

    const std::size_t order = 30;
    auto P = solve(lower(f), order + 2).at("P");
    auto one = TruncatedSeries::constant(order + 2, 1);
    auto z = TruncatedSeries::monomial(order + 2, 1);
    auto z2 = TruncatedSeries::monomial(order + 2, 2);
    auto root = sqrt(one - z * Rational(2) - z2 - TruncatedSeries::monomial(order + 2, 3, 2) +
                     TruncatedSeries::monomial(order + 2, 4));
    auto closed_p = reciprocal((one - z - z2 + root) * Rational(1, 2));
    o.require(closed_p.truncated(order) == P.truncated(order), "radical form of P differs");
    auto closed_g = (one - z + z2 - root).shifted_down(2) * Rational(1, 2);
    auto zp1 = (z * P + one).truncated(order);
    o.require(closed_g.truncated(order) == zp1, "G differs from zP + 1");
    o.require(closed_g.truncated(order).integers() == reference_prefix(SeqId::GenCatalan, order),
              "radical G differs from the recurrence");
  });

  criterion(3, "F3 counts equal the Motzkin numbers, n <= 14", 0, [](Outcome& o) {
    auto M = Polynomial::unknown("M");
    SeriesSystem motzkin{{{"M", M, Polynomial::constant(1) + Polynomial::z_power(1) * M +
                                        Polynomial::z_power(2) * M * M}}};
    auto expected = solve(motzkin, 15).at("M").counts();
    o.require(expected == reference_prefix(SeqId::Motzkin, 15), "Motzkin solve differs from the reference");
    all_oracles_agree(o, build(FamilyId::F3), 14, expected);
  });

  criterion(4, "parity paths: counts match the binomials for m <= 12, bijection round trip for m <= 10", 60,
            [](Outcome& o) {
              auto report = verify_counts(12);
              o.require(report.pass, report.failure);
              for (const auto& row : report.rows) {
                if (row.semilength == 0) continue;
                o.require(row.counts_match && row.oracle_count == row.formula_count,
                          "count mismatch at m = " + std::to_string(row.semilength));
                if (row.semilength <= 10)
                  o.require(row.round_trip, "round trip fails at m = " + std::to_string(row.semilength));
              }
            });

  criterion(5, "F5-F8 sweep, A <= 4, B <= 6: words to length 20 and series vs brute force for n <= 10", 300,
            [](Outcome& o) { sweep(o, {FamilyId::F5, FamilyId::F6, FamilyId::F7, FamilyId::F8}); });

  criterion(6, "F9-F11 sweep, r, m, n <= 4: equations to length 20 and series vs brute force for n <= 10", 0,
            [](Outcome& o) { sweep(o, {FamilyId::F9, FamilyId::F10, FamilyId::F11}); });

  criterion(7, "unrestricted counts equal the Catalan numbers, n <= 14", 0, [](Outcome& o) {
    auto expected = reference_prefix(SeqId::Catalan, 15);
    RestrictionQuad all;
    o.require(count_brute(14, all).entries == expected, "brute force differs");
    o.require(count_dp(14, all).entries == expected, "DP differs");
    auto g = parse_grammar("P -> eps | U P D P");
    o.require(solve(lower(g), 15).at("P").counts() == expected, "Catalan grammar series differs");
    o.require(check_unambiguous(g, nt("P"), 20).pass, "Catalan grammar is ambiguous");
  });

  criterion(8, "F6(1,3) is Motzkin and F6(1,2) is all ones to order 30", 0, [](Outcome& o) {
    o.require(solved_counts(build(FamilyId::F6, {{"A", 1}, {"B", 3}}), 30) == reference_prefix(SeqId::Motzkin, 30),
              "F6(1,3) differs from Motzkin");
    o.require(solved_counts(build(FamilyId::F6, {{"A", 1}, {"B", 2}}), 30) == reference_prefix(SeqId::AllOnes, 30),
              "F6(1,2) differs from all ones");
  });

  criterion(9, "swapping up- and down-run sets preserves counts for 20 random quads, n <= 9", 0, [](Outcome& o) {
    std::mt19937 rng(20261016);
    for (int i = 0; i < 20; ++i) {
      RestrictionQuad q{random_set(rng), random_set(rng), random_set(rng), random_set(rng)};
      auto a = count_brute(9, q).entries;
      auto b = count_brute(9, q.mirrored()).entries;
      o.require(a == b, "asymmetric counts for " + q.str());
      o.require(count_dp(9, q).entries == a, "DP differs from brute force for " + q.str());
    }
  });

  criterion(10, "down-run families: grammar series matches brute force, printed k = 0 form over-counts by 1 at n = 0",
            0, [](Outcome& o) {
              for (auto id : {FamilyId::F7, FamilyId::F8})
                for (const auto& p : sweep_params(id, 4, 6, 4)) {
                  auto f = build(id, p);
                  auto truth = solve(lower(f), 11).at("P");
                  o.require(truth.counts() == count_brute(10, f.quad).entries, f.name() + ": grammar series differs");
                  o.require(f.printed_variant.has_value(), f.name() + ": no printed form");
                  auto res = residuals(*f.printed_variant, {{"P", truth}}, 11).at("P");
                  o.require(res == TruncatedSeries::constant(11, -1),
                            f.name() + ": printed form residual " + res.str());
                }
            });

  return failures == 0 ? 0 : 1;
}
