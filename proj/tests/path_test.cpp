#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "dyckgram/intset.hpp"
#include "dyckgram/oracle.hpp"
#include "dyckgram/path.hpp"

using namespace dyckgram;

namespace {

std::vector<long> sorted(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("validate accepts Dyck paths") {
  auto p = parse_path("UUDD");
  CHECK(p.semilength() == 2);
  CHECK(p.str() == "UUDD");

  auto e = parse_path("");
  CHECK(e.empty());
  CHECK(e.semilength() == 0);
}

TEST_CASE("validate reports the violated condition") {
  try {
    parse_path("UDDU");
    FAIL("expected NegativePrefix");
  } catch (const NegativePrefix& e) {
    CHECK(e.position() == 3);
  }
  try {
    parse_path("UUD");
    FAIL("expected UnbalancedPath");
  } catch (const UnbalancedPath& e) {
    CHECK(e.final_height() == 1);
  }
  CHECK_THROWS_AS(parse_path("D"), NegativePrefix);
  CHECK_THROWS_AS(parse_path("UxD"), Error);
}

TEST_CASE("features of the sample paths") {
  auto f = features(parse_path("UUUDUDDD"));
  CHECK(f.peaks == std::vector<long>{3, 3});
  CHECK(f.valleys == std::vector<long>{2});
  CHECK(f.up_runs == std::vector<long>{3, 1});
  CHECK(f.down_runs == std::vector<long>{1, 3});

  auto g = features(parse_path("UD"));
  CHECK(g.peaks == std::vector<long>{1});
  CHECK(g.valleys.empty());
  CHECK(g.up_runs == std::vector<long>{1});
  CHECK(g.down_runs == std::vector<long>{1});

  auto e = features(parse_path(""));
  CHECK(e.peaks.empty());
  CHECK(e.valleys.empty());
  CHECK(e.up_runs.empty());
  CHECK(e.down_runs.empty());
}

TEST_CASE("satisfies") {
  RestrictionQuad odd_peaks;
  odd_peaks.peaks = parse_set("ap(2,3)");
  CHECK(satisfies(parse_path("UUDD"), odd_peaks));
  CHECK_FALSE(satisfies(parse_path("UUUDDD"), odd_peaks));

  RestrictionQuad short_runs;
  short_runs.up_runs = parse_set("3..");
  CHECK_FALSE(satisfies(parse_path("UUUDDD"), short_runs));
  CHECK(satisfies(parse_path("UUDUDD"), short_runs));

  RestrictionQuad everything{parse_set("1.."), parse_set("1.."), parse_set("1.."), parse_set("1..")};
  CHECK(satisfies(parse_path(""), everything));
  CHECK_FALSE(satisfies(parse_path("UD"), everything));

  RestrictionQuad valleys;
  valleys.valleys = parse_set("1");
  CHECK(satisfies(parse_path("UDUD"), valleys));  // valley at 0 is never excluded
  CHECK_FALSE(satisfies(parse_path("UUDUDD"), valleys));
}

TEST_CASE("reverse_complement") {
  CHECK(reverse_complement(parse_path("UUDD")).str() == "UUDD");
  CHECK(reverse_complement(parse_path("UUDUDD")).str() == "UUDUDD");
  CHECK(reverse_complement(parse_path("UUDDUD")).str() == "UDUUDD");
  CHECK(reverse_complement(parse_path("")).empty());
}

TEST_CASE("feature invariants over every path up to semilength 10") {
  RestrictionQuad empty;
  for (std::size_t n = 0; n <= 10; ++n) {
    for (const auto& p : enumerate(n, empty)) {
      auto f = features(p);
      auto ups = std::accumulate(f.up_runs.begin(), f.up_runs.end(), 0L);
      auto downs = std::accumulate(f.down_runs.begin(), f.down_runs.end(), 0L);
      REQUIRE(ups == static_cast<long>(n));
      REQUIRE(downs == static_cast<long>(n));
      if (n > 0) {
        REQUIRE(f.peaks.size() == f.valleys.size() + 1);
        REQUIRE(*std::min_element(f.peaks.begin(), f.peaks.end()) >= 1);
      }
      for (long v : f.valleys) REQUIRE(v >= 0);

      auto rc = reverse_complement(p);
      REQUIRE(reverse_complement(rc) == p);
      auto g = features(rc);
      REQUIRE(sorted(g.peaks) == sorted(f.peaks));
      REQUIRE(sorted(g.valleys) == sorted(f.valleys));
      REQUIRE(sorted(g.up_runs) == sorted(f.down_runs));
      REQUIRE(sorted(g.down_runs) == sorted(f.up_runs));
    }
  }
}
