#include <doctest.h>

#include <algorithm>

#include "dyckgram/sequences.hpp"
#include "dyckgram/series.hpp"

using namespace dyckgram;

TEST_CASE("reference values") {
  CHECK(reference(SeqId::Catalan, 4) == 14);
  CHECK(reference(SeqId::Catalan, 0) == 1);
  CHECK(reference(SeqId::Motzkin, 6) == 51);
  CHECK(reference(SeqId::GenCatalan, 6) == 17);
  CHECK(reference(SeqId::Powers2Prop, 0) == 1);
  CHECK(reference(SeqId::Powers2Prop, 5) == 16);
  CHECK(reference(SeqId::Prop4Binom, 4) == 3);
  CHECK(reference(SeqId::Prop4Binom, 5) == 6);
  CHECK(reference(SeqId::AllOnes, 40) == 1);
  CHECK(to_string(reference(SeqId::Catalan, 40)) == "2622127042276492108820");
}

TEST_CASE("identify") {
  auto ids = [](std::initializer_list<long> v) { return identify(std::vector<BigInt>(v.begin(), v.end())); };
  CHECK(ids({1, 1, 2, 4, 9, 21}) == std::vector<SeqId>{SeqId::Motzkin});
  CHECK(ids({1, 1, 2, 5, 14}) == std::vector<SeqId>{SeqId::Catalan});
  CHECK(ids({1, 1, 1, 1}) == std::vector<SeqId>{SeqId::AllOnes});
  CHECK(ids({1, 2, 3, 4}).empty());
  CHECK_THROWS_AS(ids({1, 1, 2}), Error);

  for (auto id : all_sequences()) {
    auto found = identify(reference_prefix(id, 9));
    CHECK(std::find(found.begin(), found.end(), id) != found.end());
  }
}

TEST_CASE("Motzkin satisfies its quadratic") {
  const std::size_t order = 30;
  auto m = TruncatedSeries::from_integers(order, reference_prefix(SeqId::Motzkin, order));
  auto z = TruncatedSeries::monomial(order, 1);
  auto z2 = TruncatedSeries::monomial(order, 2);
  CHECK(m == TruncatedSeries::constant(order, 1) + z * m + z2 * m * m);
}

TEST_CASE("generalized Catalan radical form") {
  const std::size_t order = 30;
  // G = (1 - z + z^2 - sqrt(1 - 2z - z^2 - 2z^3 + z^4)) / (2z^2)
  auto one = TruncatedSeries::constant(order + 2, 1);
  auto z = TruncatedSeries::monomial(order + 2, 1);
  auto z2 = TruncatedSeries::monomial(order + 2, 2);
  auto radicand = one - z * Rational(2) - z2 - TruncatedSeries::monomial(order + 2, 3, 2) +
                  TruncatedSeries::monomial(order + 2, 4);
  auto numer = one - z + z2 - sqrt(radicand);
  auto g = numer.shifted_down(2) * Rational(1, 2);
  CHECK(g.integers() == reference_prefix(SeqId::GenCatalan, order));
}
