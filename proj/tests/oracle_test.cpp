#include <doctest.h>

#include <random>

#include "dyckgram/oracle.hpp"
#include "reference_oracle.hpp"

using namespace dyckgram;

namespace {

std::vector<BigInt> big(std::initializer_list<unsigned long> v) {
  std::vector<BigInt> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

std::vector<BigInt> big(const std::vector<unsigned long>& v) {
  std::vector<BigInt> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

RestrictionQuad quad(const char* peaks, const char* valleys, const char* ups, const char* downs) {
  return {parse_set(peaks), parse_set(valleys), parse_set(ups), parse_set(downs)};
}

}  // namespace

TEST_CASE("enumerate lists paths lexicographically") {
  auto two = enumerate(2, {});
  REQUIRE(two.size() == 2);
  CHECK(two[0].str() == "UUDD");
  CHECK(two[1].str() == "UDUD");

  auto zero = enumerate(0, quad("1..", "1..", "1..", "1.."));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());

  auto three = enumerate(3, quad("", "", "3..", ""));
  std::vector<std::string> got;
  for (const auto& p : three) got.push_back(p.str());
  CHECK(got == std::vector<std::string>{"UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"});
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate(17, {}), ResourceLimit);
  CHECK_THROWS_AS(count_brute(17, {}), ResourceLimit);
  CHECK_NOTHROW(enumerate(3, {}, 3));
  CHECK_THROWS_AS(enumerate(4, {}, 3), ResourceLimit);
}

TEST_CASE("count_brute examples") {
  CHECK(count_brute(3, {}).entries == big({1, 1, 2, 5}));
  CHECK(count_brute(4, quad("", "", "3..", "")).entries == big({1, 1, 2, 4, 9}));
  CHECK(count_brute(4, quad("ap(2,3)", "", "3..", "")).entries == big({1, 1, 2, 4, 8}));
}

TEST_CASE("count_dp examples") {
  CHECK(count_dp(6, {}).entries == big({1, 1, 2, 5, 14, 42, 132}));
  CHECK(count_dp(4, quad("", "", "", "ap(2,1)")).entries == big({1, 0, 1, 0, 3}));
  CHECK(count_dp(0, quad("1..", "", "", "")).entries == big({1}));
  CHECK(count_dp(0, {}).method == CountMethod::DP);
}

TEST_CASE("brute force and DP agree with the reference oracle") {
  using namespace reference;
  struct Case {
    RestrictionQuad q;
    Avoid a;
  };
  std::vector<Case> cases{
      {{}, {}},
      {quad("ap(2,3)", "", "3..", ""), {ap(2, 3), none(), ap(1, 3), none()}},
      {quad("", "1", "", ""), {none(), between(1, 1), none(), none()}},
      {quad("2", "ap(3,1)", "", "2"), {between(2, 2), ap(3, 1), none(), between(2, 2)}},
      {quad("", "", "1..2", "ap(2,2)"), {none(), none(), between(1, 2), ap(2, 2)}},
      {quad("ap(2,2)", "ap(2,2)", "", ""), {ap(2, 2), ap(2, 2), none(), none()}},
  };
  for (const auto& c : cases) {
    auto expected = big(counts(8, c.a));
    CHECK(count_brute(8, c.q).entries == expected);
    CHECK(count_dp(8, c.q).entries == expected);
    CHECK(serial::count_brute(8, c.q).entries == expected);
    CHECK(serial::count_dp(8, c.q).entries == expected);
  }
}

TEST_CASE("parallel kernels match the serial references on random quads") {
  std::mt19937 rng(20240917);
  auto random_set = [&](std::uniform_int_distribution<int>& pick) {
    switch (pick(rng)) {
      case 0: return IntSet{};
      case 1: return IntSet::single(1 + static_cast<long>(rng() % 4));
      case 2: {
        long lo = 1 + static_cast<long>(rng() % 3);
        return IntSet::range(lo, lo + static_cast<long>(rng() % 3));
      }
      default: return IntSet::progression(1 + static_cast<long>(rng() % 3), 1 + static_cast<long>(rng() % 4));
    }
  };
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 25; ++trial) {
    RestrictionQuad q{random_set(pick), random_set(pick), random_set(pick), random_set(pick)};
    CAPTURE(q.str());
    auto dp = count_dp(11, q);
    REQUIRE(dp.entries == serial::count_dp(11, q).entries);
    REQUIRE(dp.entries == count_brute(11, q).entries);
    REQUIRE(dp.entries == serial::count_brute(11, q).entries);
  }
}

TEST_CASE("run swap symmetry") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    RestrictionQuad q;
    q.up_runs = IntSet::progression(1 + static_cast<long>(rng() % 3), 1 + static_cast<long>(rng() % 3));
    q.down_runs = IntSet::single(1 + static_cast<long>(rng() % 3));
    q.peaks = IntSet::single(2 + static_cast<long>(rng() % 3));
    CHECK(count_brute(10, q).entries == count_brute(10, q.mirrored()).entries);
  }
}

TEST_CASE("unrestricted counts are Catalan numbers up to 14") {
  auto table = count_brute(14, {});
  auto dp = count_dp(14, {});
  BigInt c = 1;
  for (unsigned long n = 0; n <= 14; ++n) {
    CHECK(table[n] == c);
    CHECK(dp[n] == c);
    c = c * 2 * (2 * n + 1) / (n + 2);
  }
}

TEST_CASE("DP handles semilengths past any fixed-width range") {
  // C_40 = 2622127042276492108820 exceeds 64 bits.
  auto dp = count_dp(40, {});
  CHECK(dp[40].get_str() == "2622127042276492108820");
}
