#include <doctest.h>

#include <set>

#include "aztec/errors.hpp"
#include "aztec/oracle.hpp"
#include "aztec/shuffle.hpp"

using namespace aztec;

namespace {

std::vector<Rational> ints(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

void check_law(int rank, int colors, const ExactWeights& w) {
  auto exact = exact_distribution(rank, colors, w);
  auto law = exact_shuffle_law(rank, colors, w, DiagonalConvention::odd_lower_left);
  Rational total(0);
  for (const auto& [key, p] : law) {
    auto it = exact.index.find(key);
    REQUIRE(it != exact.index.end());
    CHECK(p == exact.weights[it->second] / exact.Z);
    total += p;
  }
  CHECK(total == 1);
  for (std::size_t i = 0; i < exact.states.size(); ++i)
    if (exact.weights[i] != 0) CHECK(law.count(canonical_key(exact.states[i])) == 1);
}

}  // namespace

TEST_CASE("slide and destroy leaves 2x2 holes") {
  for (int n = 0; n <= 4; ++n) {
    for (const Tiling& t : enumerate_tilings(n)) {
      PartialTiling p = slide_destroy(t);
      CHECK(p.rank == n + 1);
      std::size_t covered = 0;
      for (Role r : p.roles) covered += r != Role::outside && r != Role::empty;
      CHECK(covered + 4 * p.holes.size() == face_count(n + 1));
    }
  }
}

TEST_CASE("rank-1 shuffles") {
  Tiling h(1, {{{-1, -1}, Orientation::horizontal}, {{-1, 0}, Orientation::horizontal}});
  Tiling v(1, {{{-1, -1}, Orientation::vertical}, {{0, -1}, Orientation::vertical}});
  CHECK(slide_destroy(h).holes == std::vector<Face>{{-2, -1}, {0, -1}});
  CHECK(slide_destroy(v).holes == std::vector<Face>{{-1, -2}, {-1, 0}});
  CHECK(slide_destroy(Tiling(0, {})).holes == std::vector<Face>{{-1, -1}});
}

TEST_CASE("creation exponent at the first step") {
  ShuffleFrame frame(empty_ktiling(3));
  CHECK_THROWS_AS(frame.creation_exponent(1, 0), InvariantViolation);
  CHECK(frame.creation_exponent(0, 0) == 2);
  frame.fill(0, 0, Fill::vertical_pair);
  CHECK_THROWS_AS(frame.creation_exponent(2, 0), InvariantViolation);
  CHECK(frame.creation_exponent(1, 0) == 1);
  frame.fill(1, 0, Fill::horizontal_pair);
  CHECK(frame.creation_exponent(2, 0) == 0);
  CHECK_THROWS_AS(frame.fill(1, 0, Fill::vertical_pair), InvariantViolation);
}

TEST_CASE("creation probability") {
  CHECK(creation_probability(1, 1, false, 0) == 0.5);
  CHECK(creation_probability(1, 0, false, 0) == 0.5);
  CHECK(creation_probability(1, 0, false, 2) == 0.0);
  CHECK(creation_probability(1, 3, false, 2) == doctest::Approx(0.9));
  CHECK(creation_probability(1, 0, true, 1) == 1.0);
  CHECK(creation_probability(2, 0, true, 0) == doctest::Approx(2.0 / 3));
}

TEST_CASE("weight index conventions") {
  CHECK(creation_weight_index({-1, -1}, 1, DiagonalConvention::odd_lower_left) == 1);
  CHECK_THROWS_AS(creation_weight_index({-1, -1}, 1, DiagonalConvention::even_lower_left), ConfigError);
  CHECK(creation_weight_index({-2, 0}, 2, DiagonalConvention::odd_lower_left) == 2);
  CHECK(creation_weight_index({-2, 0}, 2, DiagonalConvention::even_lower_left) == 2);
}

TEST_CASE("exact law of the sampler, one color") {
  check_law(1, 1, {ints({3}), ints({5}), Rational(1)});
  check_law(2, 1, {ints({2, 3}), ints({7, 11}), Rational(1)});
  check_law(3, 1, {ints({2, 3, 5}), ints({7, 11, 13}), Rational(1)});
}

TEST_CASE("exact law of the sampler, several colors") {
  for (Rational t : {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(7)}) {
    check_law(1, 2, ExactWeights::uniform(1, t));
    check_law(2, 2, ExactWeights::uniform(2, t));
    check_law(1, 3, ExactWeights::uniform(1, t));
  }
  check_law(2, 2, {ints({2, 3}), ints({7, 11}), Rational(1, 3)});
  check_law(2, 3, {ints({2, 3}), ints({7, 11}), Rational(2)});
  check_law(3, 2, {ints({2, 3, 5}), ints({7, 11, 13}), Rational(1, 2)});
}

TEST_CASE("the other diagonal reading does not give a sampler") {
  CHECK_THROWS_AS(exact_shuffle_law(2, 1, {ints({2, 3}), ints({7, 11}), Rational(1)},
                                    DiagonalConvention::even_lower_left),
                  ConfigError);
}

TEST_CASE("sampling is deterministic and order independent") {
  auto w = WeightConfig::uniform(12, 0.5);
  KTiling a = sample_ktiling(12, 3, w, RngStream(9));
  KTiling b = sample_ktiling(12, 3, w, RngStream(9));
  KTiling c = sample_ktiling(12, 3, w, RngStream(10));
  CHECK(a == b);
  CHECK_FALSE(a == c);
  for (const Tiling& t : a.tilings()) CHECK(validate(t));
}

TEST_CASE("t = 0 never produces interactions") {
  auto w = WeightConfig::uniform(10, 0.0);
  for (std::uint64_t s = 0; s < 20; ++s) CHECK(total_interactions(sample_ktiling(10, 3, w, RngStream(s))) == 0);
}
