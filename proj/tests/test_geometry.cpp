#include <doctest.h>

#include "aztec/errors.hpp"
#include "aztec/geometry.hpp"

using namespace aztec;

TEST_CASE("face counts") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(faces_of_rank(n).size() == face_count(n));
    CHECK(face_count(n) == static_cast<std::size_t>(2 * n * (n + 1)));
  }
  CHECK(faces_of_rank(1).size() == 4);
  CHECK(faces_of_rank(2).size() == 12);
}

TEST_CASE("membership") {
  CHECK(in_diamond({0, 0}, 1));
  CHECK(in_diamond({-1, -1}, 1));
  CHECK_FALSE(in_diamond({1, 0}, 1));
  CHECK(in_diamond({-1, 1}, 2));
  CHECK_FALSE(in_diamond({1, 1}, 2));
  CHECK_THROWS_AS(diagonal({5, 5}, 2), ConfigError);
}

TEST_CASE("diagonals") {
  CHECK(diagonal({0, -1}, 1) == 0);
  CHECK(diagonal({-1, 0}, 1) == 2);
  for (int n = 1; n <= 8; ++n) {
    std::size_t total = 0;
    for (int d = 0; d <= 2 * n; ++d) {
      auto faces = faces_on_diagonal(d, n);
      // odd diagonals are one face longer
      CHECK(faces.size() == static_cast<std::size_t>(d % 2 ? n + 1 : n));
      for (std::size_t i = 0; i < faces.size(); ++i) {
        CHECK(diagonal(faces[i], n) == d);
        if (i) CHECK(faces[i].u == faces[i - 1].u + 1);
      }
      total += faces.size();
    }
    CHECK(total == face_count(n));
  }
}

TEST_CASE("odd diagonals cover x from -n + 1/2 to N - n + 1/2") {
  int N = 5;
  for (int n = 1; n <= N; ++n) {
    auto odd = faces_on_diagonal(2 * n - 1, N);
    CHECK(odd.front().center_x() == HalfInt::above(-n));
    CHECK(odd.back().center_x() == HalfInt::above(N - n));
    auto even = faces_on_diagonal(2 * n - 2, N);
    CHECK(even.front().center_x() == HalfInt::above(1 - n));
    CHECK(even.back().center_x() == HalfInt::above(N - n));
  }
}

TEST_CASE("shading flips with the rank") {
  ParityConvention conv;
  CHECK(conv.shade({-1, 0}, 1) == Shade::gray);
  CHECK(conv.shade({-1, 1}, 2) == Shade::gray);
  CHECK(conv.shade({-1, 0}, 2) == Shade::white);
  CHECK(ParityConvention{1}.shade({-1, 0}, 1) == Shade::white);
}

TEST_CASE("face box round trip") {
  FaceBox box(3);
  for (std::size_t i = 0; i < box.size(); ++i) CHECK(box.index(box.face(i)) == i);
}
