#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace aztec {

// A number in Z + 1/2, stored as twice its value (always odd).
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  // k + 1/2
  static constexpr HalfInt above(int k) { return HalfInt(2 * k + 1); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return twice_ / 2.0; }

  constexpr HalfInt operator+(int k) const { return HalfInt(twice_ + 2 * k); }
  constexpr HalfInt operator-(int k) const { return HalfInt(twice_ - 2 * k); }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 1;
};

// A unit square, identified by its lower-left lattice corner (u, v).
// Its center is (u + 1/2, v + 1/2).
struct Face {
  int u = 0;
  int v = 0;

  HalfInt center_x() const { return HalfInt::above(u); }
  HalfInt center_y() const { return HalfInt::above(v); }

  Face east() const { return {u + 1, v}; }
  Face west() const { return {u - 1, v}; }
  Face north() const { return {u, v + 1}; }
  Face south() const { return {u, v - 1}; }

  bool operator==(const Face&) const = default;
  // Reading order: bottom row first, left to right.
  auto operator<=>(const Face& o) const {
    if (auto c = v <=> o.v; c != 0) return c;
    return u <=> o.u;
  }
};

// Faces of the rank-N diamond: all four corners satisfy |x| + |y| <= N + 1.
bool in_diamond(Face f, int rank);
std::size_t face_count(int rank);
std::vector<Face> faces_of_rank(int rank);

// SW-NE diagonal index, 0 at the SE boundary and 2N at the NW boundary.
int diagonal(Face f, int rank);
// Faces of diagonal d, ordered SW to NE.
std::vector<Face> faces_on_diagonal(int d, int rank);

enum class Shade : std::uint8_t { gray, white };

// Checkerboard coloring. The coloring flips with the rank so that the top
// row of every diamond starts with a gray square.
struct ParityConvention {
  int offset = 0;
  Shade shade(Face f, int rank) const {
    return ((f.u + f.v + rank + offset) % 2 + 2) % 2 == 0 ? Shade::gray : Shade::white;
  }
};

// Row-major index over the 2N x 2N bounding box of the rank-N diamond.
class FaceBox {
 public:
  explicit FaceBox(int rank) : rank_(rank) {}
  int rank() const { return rank_; }
  std::size_t size() const { return static_cast<std::size_t>(4 * rank_) * rank_; }
  bool contains(Face f) const {
    return f.u >= -rank_ && f.u < rank_ && f.v >= -rank_ && f.v < rank_;
  }
  std::size_t index(Face f) const {
    return static_cast<std::size_t>(f.v + rank_) * (2 * rank_) + (f.u + rank_);
  }
  Face face(std::size_t idx) const {
    int w = 2 * rank_;
    return {static_cast<int>(idx % w) - rank_, static_cast<int>(idx / w) - rank_};
  }

 private:
  int rank_;
};

}  // namespace aztec
