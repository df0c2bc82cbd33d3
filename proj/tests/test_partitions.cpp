#include <doctest.h>

#include "aztec/errors.hpp"
#include "aztec/oracle.hpp"
#include "aztec/partitions.hpp"
#include "fixtures.hpp"

using namespace aztec;

namespace {

InterlacedSequence seq(int rank, std::vector<std::vector<int>> lambda, std::vector<std::vector<int>> mu) {
  InterlacedSequence s;
  s.rank = rank;
  for (auto& p : lambda) s.lambda.emplace_back(std::move(p));
  for (auto& p : mu) s.mu.emplace_back(std::move(p));
  return s;
}

}  // namespace

TEST_CASE("partition basics") {
  Partition p({4, 3, 2, 2, 1});
  CHECK(p.size() == 12);
  CHECK(p.conjugate() == Partition(std::vector<int>{5, 4, 2, 1}));
  CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), ConfigError);
  CHECK(interlaces(Partition({2}), Partition({2, 1})));
  CHECK_FALSE(interlaces(Partition({1}), Partition({2, 2})));
  CHECK(co_interlaces(Partition({2, 1}), Partition({1})));
  CHECK_FALSE(co_interlaces(Partition({2}), Partition()));
}

TEST_CASE("maya diagram of (4,3,2,2,1)") {
  Partition p({4, 3, 2, 2, 1});
  CHECK(maya_diagram(p, HalfInt::above(-7), HalfInt::above(5)) == "**o*o**o*o*oo");
  auto x = maya_positions(p, 6);
  CHECK(from_maya(x) == p);
  CHECK(x[0] == HalfInt::above(3));
  CHECK(x[5] == HalfInt::above(-6));
}

TEST_CASE("the all-vertical tiling carries empty partitions") {
  auto s = tiling_to_sequence(fixtures::rank3_vacuum());
  CHECK(s.is_valid());
  for (const auto& p : s.lambda) CHECK(p.length() == 0);
  for (const auto& p : s.mu) CHECK(p.length() == 0);
}

TEST_CASE("the three colors of the rank-3 example") {
  auto blue = seq(3, {{2}, {2, 1}, {1, 1}}, {{}, {2}, {1}, {}});
  auto red = seq(3, {{3}, {2}, {1}}, {{}, {2}, {1}, {}});
  auto green = seq(3, {{1}, {1}, {}}, {{}, {}, {}, {}});
  CHECK(tiling_to_sequence(fixtures::rank3_blue()) == blue);
  CHECK(tiling_to_sequence(fixtures::rank3_red()) == red);
  CHECK(tiling_to_sequence(fixtures::rank3_green()) == green);
  CHECK(sequence_to_tiling(blue) == fixtures::rank3_blue());
  CHECK(sequence_to_tiling(red) == fixtures::rank3_red());
  CHECK(sequence_to_tiling(green) == fixtures::rank3_green());
}

TEST_CASE("rank-1 tilings") {
  Tiling h(1, {{{-1, -1}, Orientation::horizontal}, {{-1, 0}, Orientation::horizontal}});
  Tiling v(1, {{{-1, -1}, Orientation::vertical}, {{0, -1}, Orientation::vertical}});
  CHECK(tiling_to_sequence(h).lambda[0] == Partition({1}));
  CHECK(tiling_to_sequence(v).lambda[0].length() == 0);
}

TEST_CASE("bijection round trips over all small tilings") {
  for (int n = 0; n <= 4; ++n) {
    for (const Tiling& t : enumerate_tilings(n)) {
      auto s = tiling_to_sequence(t);
      CHECK(s.is_valid());
      CHECK(sequence_to_tiling(s) == t);
    }
  }
}

namespace {

// All partitions with at most `rows` parts, each at most `cols`.
std::vector<Partition> boxed(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int max) -> void {
    out.emplace_back(parts);
    if (static_cast<int>(parts.size()) == rows) return;
    for (int p = 1; p <= max; ++p) {
      parts.push_back(p);
      self(self, p);
      parts.pop_back();
    }
  };
  rec(rec, cols);
  return out;
}

}  // namespace

TEST_CASE("interlaced sequences are in bijection with tilings") {
  for (int N = 1; N <= 3; ++N) {
    std::vector<InterlacedSequence> all;
    InterlacedSequence s;
    s.rank = N;
    s.mu.emplace_back();
    auto rec = [&](auto&& self, int n) -> void {
      if (n > N) {
        if (s.mu.back().length() == 0) all.push_back(s);
        return;
      }
      for (const Partition& l : boxed(n, N - n + 1)) {
        if (!interlaces(s.mu.back(), l)) continue;
        for (const Partition& m : boxed(n, N - n)) {
          if (!co_interlaces(l, m)) continue;
          s.lambda.push_back(l);
          s.mu.push_back(m);
          self(self, n + 1);
          s.lambda.pop_back();
          s.mu.pop_back();
        }
      }
    };
    rec(rec, 1);
    CHECK(all.size() == (std::size_t{1} << (N * (N + 1) / 2)));
    std::vector<Tiling> images;
    for (const auto& seq : all) {
      REQUIRE(seq.is_valid());
      Tiling t = sequence_to_tiling(seq);
      CHECK(validate(t));
      CHECK(tiling_to_sequence(t) == seq);
      images.push_back(t);
    }
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j) CHECK_FALSE(images[i] == images[j]);
  }
}

TEST_CASE("horizontal dominoes on each diagonal match the strip sizes") {
  for (int n = 1; n <= 4; ++n) {
    for (const Tiling& t : enumerate_tilings(n)) {
      auto s = tiling_to_sequence(t);
      std::vector<int> c_count(n, 0), b_count(n, 0);
      for (const Domino& d : t.dominoes()) {
        auto f = weight_factor(d, n);
        if (f.kind == WeightFactor::Kind::c) ++c_count[f.index - 1];
        if (f.kind == WeightFactor::Kind::b) ++b_count[f.index - 1];
      }
      for (int m = 1; m <= n; ++m) {
        CHECK(c_count[m - 1] == s.lambda[m - 1].size() - s.mu[m - 1].size());
        CHECK(b_count[n - m] == s.lambda[m - 1].size() - s.mu[m].size());
      }
    }
  }
}

TEST_CASE("particle arrays") {
  KTiling kt({fixtures::rank3_blue(), fixtures::rank3_red(), fixtures::rank3_green()});
  auto a = ktiling_to_array(kt);
  CHECK(a.has_valid_shape());
  CHECK(a.satisfies_interlacing());
  CHECK(a.satisfies_bounds());
  CHECK(array_to_ktiling(a) == kt);
  auto broken = a;
  broken.colors[0].x[2][0] = broken.colors[0].x[2][0] + 3;
  CHECK_FALSE(broken.satisfies_bounds());
  CHECK_THROWS_AS(array_to_ktiling(broken), MalformedInput);
}

TEST_CASE("interactions read off the partitions") {
  for (int n = 1; n <= 3; ++n) {
    auto tilings = enumerate_tilings(n);
    std::vector<InterlacedSequence> seqs;
    for (const Tiling& t : tilings) seqs.push_back(tiling_to_sequence(t));
    for (std::size_t a = 0; a < tilings.size(); ++a)
      for (std::size_t b = 0; b < tilings.size(); ++b)
        REQUIRE(interactions_from_partitions(seqs[a], seqs[b]) == count_interactions(tilings[a], tilings[b]));
  }
}
