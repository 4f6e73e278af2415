#include <doctest.h>

#include "braidinv/crossing.hpp"
#include "braidinv/errors.hpp"
#include "braidinv/oracles.hpp"
#include "braidinv/verify.hpp"

using namespace braidinv;

TEST_CASE("naive determinant golden values") {
  CHECK(naive_determinant(IntMatrix(1, {BigInt(9)})) == 9);
  CHECK(naive_determinant(IntMatrix::identity(4)) == 1);
  CHECK(naive_determinant(IntMatrix(2, {BigInt(1), BigInt(2),  //
                                        BigInt(3), BigInt(4)})) == -2);
  CHECK_THROWS_AS(naive_determinant(IntMatrix(8)), CostGuardError);
}

TEST_CASE("production determinant matches the naive one") {
  Rng rng(5150);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.range(1, 6);
    const IntMatrix m = random_matrix(rng, n, -9, 9);
    CHECK(determinant(m) == naive_determinant(m));
  }
}

TEST_CASE("direct power tracing equals the reindexed sum") {
  CHECK(direct_power_matrix(parse_word("-1 4 3", 5)) ==
        pure_power_sum(parse_word("-1 4 3", 5)));
  CHECK(direct_power_matrix(BraidWord(3)) == IntMatrix(3));

  Rng rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord w = random_word(rng, rng.range(2, 5), 8);
    CHECK(direct_power_matrix(w) == pure_power_sum(w));
  }
}

TEST_CASE("direct power tracing refuses absurd letter counts") {
  // a permutation of order 30030 = lcm(2,3,5,7,11,13) on 41 strands,
  // padded with canceling pairs until order * length crosses the guard
  std::vector<Letter> letters;
  int base = 0;
  for (int cycle : {2, 3, 5, 7, 11, 13}) {
    for (int i = 1; i < cycle; ++i) letters.push_back(Letter{base + i, +1});
    base += cycle;
  }
  while (letters.size() < 335) {
    letters.push_back(Letter{1, +1});
    letters.push_back(Letter{1, -1});
  }
  const BraidWord w(41, std::move(letters));
  REQUIRE(perm_order(permutation_of(w)) == 30030);
  CHECK_THROWS_AS(direct_power_matrix(w), CostGuardError);
}

TEST_CASE("similarity witness accepts every permutation and matrix") {
  Rng rng(64);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.range(1, 6);
    CHECK(similarity_witness_check(random_permutation(rng, n),
                                   random_matrix(rng, n, -9, 9)));
  }
  CHECK(similarity_witness_check(
      permutation_of(parse_word("-1 4 3", 5)),
      crossing_matrix(parse_word("-1 4 3", 5))));
}
