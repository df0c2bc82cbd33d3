#pragma once

#include <array>
#include <vector>

#include "aztec/tiling.hpp"

namespace fixtures {

using aztec::Domino;
using aztec::Orientation;

// Rectangles (x1, y1, x2, y2) of a rank-3 picture whose diamond is centered at (3, 0).
inline aztec::Tiling from_rects(const std::vector<std::array<int, 4>>& rects) {
  std::vector<Domino> ds;
  for (auto [x1, y1, x2, y2] : rects)
    ds.push_back({{x1 - 3, y1}, x2 - x1 == 2 ? Orientation::horizontal : Orientation::vertical});
  return aztec::Tiling(3, ds);
}

// The tiling of empty partitions: all vertical.
inline aztec::Tiling rank3_vacuum() {
  return from_rects({{0, -1, 1, 1}, {1, 0, 2, 2}, {2, 1, 3, 3}, {3, 1, 4, 3}, {4, 0, 5, 2}, {5, -1, 6, 1},
                     {1, -2, 2, 0}, {2, -3, 3, -1}, {3, -3, 4, -1}, {4, -2, 5, 0}, {2, -1, 3, 1}, {3, -1, 4, 1}});
}

// A rank-3 3-tiling with known partitions (blue, red, green).
inline aztec::Tiling rank3_blue() {
  return from_rects({{0, -1, 1, 1}, {1, -2, 3, -1}, {1, -1, 3, 0}, {1, 0, 3, 1}, {1, 1, 3, 2}, {2, -3, 4, -2},
                     {2, 2, 4, 3}, {3, -2, 5, -1}, {3, -1, 4, 1}, {3, 1, 5, 2}, {4, -1, 5, 1}, {5, -1, 6, 1}});
}

inline aztec::Tiling rank3_red() {
  return from_rects({{0, -1, 1, 1}, {1, -2, 2, 0}, {1, 0, 2, 2}, {2, -3, 4, -2}, {2, -2, 3, 0}, {2, 0, 3, 2},
                     {2, 2, 4, 3}, {3, -2, 5, -1}, {3, -1, 4, 1}, {3, 1, 5, 2}, {4, -1, 6, 0}, {4, 0, 6, 1}});
}

inline aztec::Tiling rank3_green() {
  return from_rects({{0, -1, 1, 1}, {1, -2, 2, 0}, {1, 0, 2, 2}, {2, -3, 4, -2}, {2, -2, 4, -1}, {2, -1, 4, 0},
                     {2, 0, 4, 1}, {2, 1, 3, 3}, {3, 1, 4, 3}, {4, -2, 5, 0}, {4, 0, 5, 2}, {5, -1, 6, 1}});
}

}  // namespace fixtures
