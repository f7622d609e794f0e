#include <doctest.h>

#include "spinlf/weights.hpp"

using namespace spinlf;

TEST_CASE("dominant weights validate monotonicity and sign") {
  DominantWeight w({3, 2, 2, 0});
  CHECK(w.parts() == 4);
  CHECK(w.total() == 7);
  CHECK(w[1] == 2);
  CHECK(w.last_part_zero());
  CHECK_THROWS_AS(DominantWeight({1, 2}), Error);
  CHECK_THROWS_AS(DominantWeight({2, -1}), Error);
}

TEST_CASE("padding appends zeros and never truncates") {
  DominantWeight w({2, 1});
  CHECK(w.padded(4) == DominantWeight({2, 1, 0, 0}));
  CHECK(w.padded(2) == w);
  CHECK_THROWS_AS(w.padded(1), RankMismatch);
}

TEST_CASE("enumeration lists partitions into at most n parts, lex descending") {
  auto all = enumerate_dominant(2, 3);
  REQUIRE(all.size() == 2);
  CHECK(all[0] == DominantWeight({3, 0}));
  CHECK(all[1] == DominantWeight({2, 1}));

  auto deg4 = enumerate_dominant(3, 4);
  REQUIRE(deg4.size() == 4);
  CHECK(deg4[0] == DominantWeight({4, 0, 0}));
  CHECK(deg4[1] == DominantWeight({3, 1, 0}));
  CHECK(deg4[2] == DominantWeight({2, 2, 0}));
  CHECK(deg4[3] == DominantWeight({2, 1, 1}));

  auto zero = enumerate_dominant(3, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == DominantWeight::zero(3));
}

TEST_CASE("enumeration count matches the partition recursion") {
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j <= 9; ++j)
      CHECK(static_cast<long long>(enumerate_dominant(n, j).size()) == partition_count(j, n));
  // spot values: p(6, <=3) = 7, p(8, <=2) = 5
  CHECK(partition_count(6, 3) == 7);
  CHECK(partition_count(8, 2) == 5);
}
