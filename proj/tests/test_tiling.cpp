#include <doctest.h>

#include <algorithm>

#include "aztec/errors.hpp"
#include "aztec/oracle.hpp"
#include "aztec/tiling.hpp"
#include "fixtures.hpp"

using namespace aztec;

namespace {

Tiling rank1_horizontal() {
  return Tiling(1, {{{-1, -1}, Orientation::horizontal}, {{-1, 0}, Orientation::horizontal}});
}
Tiling rank1_vertical() {
  return Tiling(1, {{{-1, -1}, Orientation::vertical}, {{0, -1}, Orientation::vertical}});
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate(rank1_horizontal()));
  CHECK(validate(rank1_vertical()));
  CHECK_FALSE(validate(Tiling(1, {{{-1, -1}, Orientation::horizontal}})));
  CHECK_FALSE(validate(Tiling(1, {{{-1, -1}, Orientation::horizontal}, {{-1, -1}, Orientation::vertical}})));
  CHECK_FALSE(validate(Tiling(1, {{{0, 0}, Orientation::horizontal}, {{-1, -1}, Orientation::horizontal}})));
  CHECK(validate(fixtures::rank3_vacuum()));
  CHECK(validate(fixtures::rank3_blue()));
  CHECK(validate(fixtures::rank3_red()));
  CHECK(validate(fixtures::rank3_green()));
}

TEST_CASE("compass types of the rank-1 tilings") {
  auto h = rank1_horizontal().dominoes();
  CHECK(classify(h[0], 1) == Compass::south);
  CHECK(classify(h[1], 1) == Compass::north);
  auto v = rank1_vertical().dominoes();
  CHECK(classify(v[0], 1) == Compass::west);
  CHECK(classify(v[1], 1) == Compass::east);
}

TEST_CASE("domino weights") {
  WeightConfig w{{2, 3}, {7, 11}, 1.0};
  CHECK(domino_weight({{-1, 0}, Orientation::horizontal}, WeightConfig{{5}, {7}, 1}, 1) == 7);
  CHECK(domino_weight({{-1, -1}, Orientation::horizontal}, WeightConfig{{5}, {7}, 1}, 1) == 5);
  CHECK(domino_weight({{-1, -1}, Orientation::vertical}, w, 2) == 1);
  // rank 2: diagonal 1 -> c1, 2 -> b2, 3 -> c2, 4 -> b1
  CHECK(domino_weight({{-1, -2}, Orientation::horizontal}, w, 2) == 2);
  CHECK(domino_weight({{-1, -1}, Orientation::horizontal}, w, 2) == 11);
  CHECK(domino_weight({{-1, 0}, Orientation::horizontal}, w, 2) == 3);
  CHECK(domino_weight({{-1, 1}, Orientation::horizontal}, w, 2) == 7);
  CHECK(tiling_weight(rank1_horizontal(), WeightConfig{{5}, {7}, 1}) == 35);
}

TEST_CASE("weight config validation") {
  CHECK_THROWS_AS(WeightConfig({{1}, {1}, -1}).validate(1), ConfigError);
  CHECK_THROWS_AS(WeightConfig({{0}, {1}, 1}).validate(1), ConfigError);
  CHECK_THROWS_AS(WeightConfig({{1}, {1}, 1}).validate(2), ConfigError);
  CHECK_NOTHROW(WeightConfig({{1}, {1}, 0}).validate(1));
}

TEST_CASE("rank-1 interaction counts") {
  Tiling h = rank1_horizontal();
  Tiling v = rank1_vertical();
  CHECK(count_interactions(v, v) == 0);
  CHECK(count_interactions(h, h) == 1);
  CHECK(count_interactions(h, v) + count_interactions(v, h) == 1);
}

TEST_CASE("all k-tilings of rank 1 with k = 2") {
  std::vector<int> e;
  for (const KTiling& kt : enumerate_ktilings(1, 2)) e.push_back(total_interactions(kt));
  std::sort(e.begin(), e.end());
  CHECK(e == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("a tiling interacts with itself once per S domino") {
  for (int n = 1; n <= 3; ++n) {
    for (const Tiling& t : enumerate_tilings(n)) {
      int south = 0;
      for (const Domino& d : t.dominoes()) south += classify(d, n) == Compass::south;
      CHECK(count_interactions(t, t) == south);
    }
  }
}

TEST_CASE("canonical keys separate k-tilings") {
  auto all = enumerate_ktilings(2, 2);
  std::vector<std::string> keys;
  for (const auto& kt : all) keys.push_back(canonical_key(kt));
  std::sort(keys.begin(), keys.end());
  CHECK(std::unique(keys.begin(), keys.end()) == keys.end());
}
