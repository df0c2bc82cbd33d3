#pragma once

#include <functional>
#include <vector>

#include "aztec/partitions.hpp"
#include "aztec/rng.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

enum class Move { forced_jump, forced_stay, free };

// The rank N state seen from one update: x(n) for n = 1..N+1, where x(N+1) is
// the vacuum, and ytilde(n) = x(n-1).
class DynamicsFrame {
 public:
  explicit DynamicsFrame(const ColoredParticleArray& a);

  int old_rank() const { return rank_; }
  int colors() const { return static_cast<int>(x_.size()); }
  HalfInt x(int l, int n, int i) const { return x_[l][n - 1][i - 1]; }
  // ytilde_i(n) for i = 1..n, with ytilde_n(n) = -n + 1/2.
  HalfInt ytilde(int l, int n, int i) const;

  Move move(int l, int n, int i) const;
  // Number of other colors blocking a jump of x_i(n) of color l.
  int t_power(int l, int n, int i) const;

 private:
  int rank_;
  std::vector<std::vector<std::vector<HalfInt>>> x_;
};

// One step of the colored particle dynamics, rank N -> N + 1. Free particles
// draw from the key (N, color, level, index).
ColoredParticleArray parallel_update(const ColoredParticleArray& a, const WeightConfig& w,
                                     const RngStream& rng);

ColoredParticleArray empty_array(int colors);

using ArrayObserver = std::function<void(const ColoredParticleArray&)>;

ColoredParticleArray sample_dynamics(int rank, int colors, const WeightConfig& w,
                                     const RngStream& rng, const ArrayObserver& observer = {});

}  // namespace aztec
