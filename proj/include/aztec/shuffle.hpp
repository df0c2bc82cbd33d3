#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "aztec/rng.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

// Where the weight index of a new 2x2 block is read from: its lower-left face
// sits on diagonal 2i - 1 (odd_lower_left) or 2i (even_lower_left) of the new diamond.
enum class DiagonalConvention : std::uint8_t { odd_lower_left, even_lower_left };

// Weight index i of the block with lower-left face `ll` in the rank `new_rank` diamond.
// Throws ConfigError when the convention yields no index in 1..new_rank.
int creation_weight_index(Face ll, int new_rank, DiagonalConvention conv);

// Probability of filling a block with two horizontal dominoes.
double creation_probability(double weight, double t, bool t_infinite, int exponent);

// Result of sliding and destroying one color: a rank N+1 grid whose empty faces
// split into 2x2 holes.
struct PartialTiling {
  int rank = 0;
  std::vector<Role> roles;
  std::vector<Face> holes;  // lower-left faces, reading order
};

PartialTiling slide_destroy(const Tiling& t);

enum class Fill : std::int8_t { unfilled = -1, vertical_pair = 0, horizontal_pair = 1 };

// A hole, with the free particle it corresponds to: level n (its lower-left face
// is on diagonal 2n - 1) and the particle's index in x(n).
struct Block {
  Face ll;
  int level = 0;
  int index = 0;
};

// One shuffling step in progress: all colors slid, holes waiting to be filled.
class ShuffleFrame {
 public:
  explicit ShuffleFrame(const KTiling& kt);

  int new_rank() const { return rank_; }
  int colors() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks(int l) const { return blocks_.at(l); }

  // Power of t attached to a horizontal fill of block b of color l. Needs every
  // smaller color filled.
  int creation_exponent(int l, std::size_t b) const;
  void fill(int l, std::size_t b, Fill f);
  KTiling finish() const;

 private:
  bool color_filled(int l) const { return unfilled_[l] == 0; }
  bool is_block_ll(int l, Face f) const;

  int rank_;
  std::vector<std::vector<Role>> roles_;
  std::vector<std::vector<std::int32_t>> block_at_;
  std::vector<std::vector<Block>> blocks_;
  std::vector<std::vector<Fill>> fills_;
  std::vector<std::size_t> unfilled_;
};

struct ShuffleOptions {
  DiagonalConvention convention = DiagonalConvention::odd_lower_left;
  // Rewrites creation exponents; only used to check that the statistical tests bite.
  std::function<int(int color, int exponent)> exponent_hook;
};

// Rank N -> N + 1. Draws are keyed by (N, color, level, index).
KTiling shuffle_step(const KTiling& kt, const WeightConfig& w, const RngStream& rng,
                     const ShuffleOptions& opts = {});

using StepObserver = std::function<void(int new_rank, const KTiling&)>;

KTiling sample_ktiling(int rank, int colors, const WeightConfig& w, const RngStream& rng,
                       const ShuffleOptions& opts = {}, const StepObserver& observer = {});

KTiling empty_ktiling(int colors);

}  // namespace aztec
