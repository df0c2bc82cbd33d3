#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "aztec/oracle.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

// Edge weights of a cell: a top, b right, c bottom, d left. The white vertex
// sits at the top left.
struct CellWeights {
  Rational a{1}, b{1}, c{1}, d{1};
};

// Boundary condition of one color on a cell, named after the move it makes:
// right/left/up/down for a single inner dimer, creation when all four corners
// are matched outside, destruction when none are.
enum class Boundary : std::uint8_t { creation, destruction, right, left, up, down };

inline constexpr std::array<Boundary, 6> all_boundaries = {Boundary::creation, Boundary::destruction,
                                                           Boundary::right,    Boundary::left,
                                                           Boundary::up,       Boundary::down};

std::string boundary_name(Boundary b);

enum class BoundaryClass : std::uint8_t { C, D, neither };

// C: one color creates and the other creates or moves left/down. D: likewise with destruction.
BoundaryClass classify_pair(Boundary blue, Boundary red);

// a' = c/D, b' = d/D, c' = a/D, d' = b/D with D = ac + bd.
CellWeights spider_transform(const CellWeights& w);
Rational spider_delta(const CellWeights& w);
// (ac + bd) / (act + bd)
Rational spider_gamma(const CellWeights& w, const Rational& t);

enum class Side : std::uint8_t { before, after };

// Partition function of one cell with blue boundary `blue` and red boundary `red`.
// On the after side `w` are the transformed weights.
Rational local_Z(const CellWeights& w, Boundary blue, Boundary red, Side side, const Rational& t);

struct SpiderCheck {
  Boundary blue;
  Boundary red;
  BoundaryClass cls;
  Rational before;
  Rational after;  // Delta^2 Gamma^{+-1} Z' as predicted
  bool pass;
};

struct SpiderReport {
  std::vector<SpiderCheck> checks;  // 36 entries
  bool all_pass = true;
};

SpiderReport verify_spider_relations(const CellWeights& w, const Rational& t);

// Cells of the rank-N diamond with its boundary decoration: centers (x, y) with
// |x| + |y| <= N and x + y = N mod 2. Corners outside the diamond count as
// matched outside.
struct CellState {
  int x = 0;
  int y = 0;
  Boundary boundary = Boundary::creation;
};

std::vector<CellState> cell_states(const Tiling& t);

// Interactions of `lower` with `upper` summed cell by cell.
int cell_interactions(const Tiling& lower, const Tiling& upper);

// For every pair of colors and every SW-NE diagonal of cells, #C - #D == 1.
bool diagonal_count_check(const KTiling& kt);

}  // namespace aztec
