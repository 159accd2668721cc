#include <doctest.h>

#include "dyckgram/bijection.hpp"
#include "dyckgram/oracle.hpp"

#include <set>

using namespace dyckgram;

TEST_CASE("worked examples") {
  CHECK(path_to_walk(parse_path("UUUDDD")) == Walk{{+1, -1}});
  CHECK(path_to_walk(parse_path("UUUDDD")).heights() == std::vector<long>{1, 0});
  CHECK(path_to_walk(parse_path("UDUDUD")) == Walk{{-1, +1}});
  CHECK(path_to_walk(parse_path("UDUD")) == Walk{{-1}});
  CHECK(path_to_walk(parse_path("UD")).size() == 0);

  CHECK(walk_to_path(Walk{{+1, -1}}) == parse_path("UUUDDD"));
  CHECK(walk_to_path(Walk{{-1}}) == parse_path("UDUD"));
  CHECK(walk_to_path(Walk{}) == parse_path("UD"));
  CHECK(Walk{{+1, -1}}.str() == "UD");
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(path_to_walk(parse_path("UUDD")), NotInDomain);
  CHECK_THROWS_AS(path_to_walk(parse_path("")), NotInDomain);
  CHECK_THROWS_AS(walk_to_path(Walk{{+1}}), NotInCodomain);
  CHECK_THROWS_AS(walk_to_path(Walk{{+1, +1}}), NotInCodomain);
  CHECK_THROWS_AS(walk_to_path(Walk{{2}}), NotInCodomain);
}

TEST_CASE("exhaustive round trip and crossing parity") {
  for (std::size_t s = 1; s <= 10; ++s) {
    auto paths = enumerate(s, parity_quad());
    std::set<Walk> images;
    for (const auto& p : paths) {
      CHECK(is_parity_path(p));
      auto w = path_to_walk(p);
      REQUIRE(w.size() == s - 1);
      CHECK(w.end_height() == (s % 2 == 1 ? 0 : -1));
      CHECK(walk_to_path(w) == p);
      images.insert(w);

      long h = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        long next = h + w.steps[i];
        std::size_t index = i + 1;
        if (h == 0 && next == -1) CHECK(index % 2 == 1);
        if (h == -1 && next == 0) CHECK(index % 2 == 0);
        h = next;
      }
    }
    CHECK(images.size() == paths.size());
  }
}

TEST_CASE("verify_counts") {
  for (std::size_t s : {2, 3, 4}) {
    auto r = verify_counts(s);
    CHECK(r.pass);
    REQUIRE(r.rows.size() == s + 1);
  }
  auto r = verify_counts(4);
  CHECK(r.rows[2].oracle_count == 1);
  CHECK(r.rows[3].oracle_count == 2);
  CHECK(r.rows[4].oracle_count == 3);
  CHECK(r.rows[4].formula_count == 3);
  CHECK_THROWS_AS(verify_counts(17), ResourceLimit);
}
