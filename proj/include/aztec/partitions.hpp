#pragma once

#include <string>
#include <vector>

#include "aztec/geometry.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

class Partition {
 public:
  Partition() = default;
  // Parts must be non-increasing and non-negative; trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);

  // 1-based; zero past the last part.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  const std::vector<int>& parts() const { return parts_; }
  Partition conjugate() const;
  std::string str() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// mu ⪯ lambda: lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
bool interlaces(const Partition& mu, const Partition& lambda);
// lambda ⪰' mu: the conjugates interlace, i.e. lambda / mu is a vertical strip.
bool co_interlaces(const Partition& lambda, const Partition& mu);

// First `count` particle positions x_i = lambda_i - i + 1/2, decreasing.
std::vector<HalfInt> maya_positions(const Partition& p, int count);
// Inverse of maya_positions; positions must be strictly decreasing.
Partition from_maya(const std::vector<HalfInt>& positions);
// Occupation of the sites lo, lo + 1, ..., hi ('*' particle, 'o' hole).
std::string maya_diagram(const Partition& p, HalfInt lo, HalfInt hi);

// emptyset = mu(1) ⪯ lambda(1) ⪰' mu(2) ⪯ lambda(2) ⪰' ... ⪯ lambda(N) ⪰' mu(N+1) = emptyset
struct InterlacedSequence {
  int rank = 0;
  std::vector<Partition> lambda;  // lambda[n-1] = lambda(n), n = 1..N
  std::vector<Partition> mu;      // mu[n-1] = mu(n), n = 1..N+1

  bool is_valid() const;
  bool operator==(const InterlacedSequence&) const = default;
};

// Particle positions (face center x) on diagonal d, decreasing.
std::vector<HalfInt> slice_particles(const Tiling& t, int d);

InterlacedSequence tiling_to_sequence(const Tiling& t);
Tiling sequence_to_tiling(const InterlacedSequence& s);

// Total interactions of color a with color b > a read off the partitions.
int interactions_from_partitions(const InterlacedSequence& a, const InterlacedSequence& b);

// x(n) lives on diagonal 2n - 1 and has n particles, y(n) on diagonal 2n - 2 with n - 1.
struct ParticleLevels {
  std::vector<std::vector<HalfInt>> x;  // x[n-1], n = 1..N
  std::vector<std::vector<HalfInt>> y;  // y[n-1], n = 1..N
  bool operator==(const ParticleLevels&) const = default;
};

struct ColoredParticleArray {
  int rank = 0;
  std::vector<ParticleLevels> colors;

  int color_count() const { return static_cast<int>(colors.size()); }
  // Level sizes match the rank.
  bool has_valid_shape() const;
  // x_i(n) >= y_i(n) > x_{i+1}(n) and x_i(n) >= y_i(n+1) >= x_i(n) - 1.
  bool satisfies_interlacing() const;
  // -n + 1/2 <= x(n) <= N - n + 1/2 and -n + 3/2 <= y(n) <= N - n + 1/2.
  bool satisfies_bounds() const;
  bool operator==(const ColoredParticleArray&) const = default;
};

ParticleLevels tiling_to_levels(const Tiling& t);
ColoredParticleArray ktiling_to_array(const KTiling& kt);
KTiling array_to_ktiling(const ColoredParticleArray& a);

}  // namespace aztec
