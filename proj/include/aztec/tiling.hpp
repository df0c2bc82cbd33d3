#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aztec/geometry.hpp"

namespace aztec {

enum class Orientation : std::uint8_t { horizontal, vertical };

// A domino is anchored at its left (horizontal) or bottom (vertical) face.
struct Domino {
  Face anchor;
  Orientation orientation = Orientation::horizontal;

  Face second() const {
    return orientation == Orientation::horizontal ? anchor.east() : anchor.north();
  }
  bool operator==(const Domino&) const = default;
};

// N and E dominoes are anchored on a gray face, S and W on a white one.
enum class Compass : std::uint8_t { north, south, east, west };

Compass classify(const Domino& d, int rank, const ParityConvention& conv = {});
// N and W dominoes carry particles, S and E dominoes carry holes.
inline bool carries_particles(Compass c) { return c == Compass::north || c == Compass::west; }
char compass_letter(Compass c);

// What covers a face of the bounding box.
enum class Role : std::uint8_t { outside, empty, h_left, h_right, v_bottom, v_top };

// The domino that puts role r on face f, if any.
std::optional<Domino> domino_for_role(Face f, Role r);

class Tiling {
 public:
  Tiling() = default;
  // Records overlaps and out-of-diamond dominoes instead of throwing; see validate().
  Tiling(int rank, const std::vector<Domino>& dominoes);
  // Trusted construction from a role grid over FaceBox(rank).
  static Tiling from_roles(int rank, std::vector<Role> roles);

  int rank() const { return rank_; }
  bool is_valid() const { return valid_; }
  Role role(Face f) const;
  std::optional<Domino> domino_at(Face f) const;
  // Canonical order: anchors in reading order.
  std::vector<Domino> dominoes() const;
  const std::vector<Role>& roles() const { return roles_; }

  bool operator==(const Tiling& o) const {
    return rank_ == o.rank_ && valid_ == o.valid_ && roles_ == o.roles_;
  }

 private:
  int rank_ = 0;
  bool valid_ = true;
  std::vector<Role> roles_;
};

bool validate(const Tiling& t);

struct WeightConfig {
  std::vector<double> c;
  std::vector<double> b;
  double t = 1.0;
  bool t_infinite = false;

  static WeightConfig uniform(int rank, double t);
  // Throws ConfigError unless both tuples have at least `rank` positive finite entries
  // and t is a non-negative finite number (or t_infinite is set).
  void validate(int rank) const;
};

// Which weight a domino carries: 1 for verticals, c_m or b_m for horizontals.
struct WeightFactor {
  enum class Kind : std::uint8_t { one, c, b } kind = Kind::one;
  int index = 0;  // 1-based
};

WeightFactor weight_factor(const Domino& d, int rank);

template <class Scalar>
Scalar weight_value(const WeightFactor& f, const std::vector<Scalar>& c,
                    const std::vector<Scalar>& b) {
  switch (f.kind) {
    case WeightFactor::Kind::c: return c.at(f.index - 1);
    case WeightFactor::Kind::b: return b.at(f.index - 1);
    default: return Scalar(1);
  }
}

template <class Scalar>
Scalar tiling_weight_as(const Tiling& t, const std::vector<Scalar>& c,
                        const std::vector<Scalar>& b) {
  Scalar w(1);
  for (const Domino& d : t.dominoes())
    if (d.orientation == Orientation::horizontal) w *= weight_value(weight_factor(d, t.rank()), c, b);
  return w;
}

double domino_weight(const Domino& d, const WeightConfig& w, int rank);
double tiling_weight(const Tiling& t, const WeightConfig& w);

// Interactions of color `lower` with color `upper` (lower < upper).
int count_interactions(const Tiling& lower, const Tiling& upper);

class KTiling {
 public:
  KTiling() = default;
  explicit KTiling(std::vector<Tiling> colors);

  int rank() const { return colors_.empty() ? 0 : colors_.front().rank(); }
  int colors() const { return static_cast<int>(colors_.size()); }
  const Tiling& color(int l) const { return colors_.at(l); }
  const std::vector<Tiling>& tilings() const { return colors_; }
  bool operator==(const KTiling&) const = default;

 private:
  std::vector<Tiling> colors_;
};

int total_interactions(const KTiling& kt);
double ktiling_weight(const KTiling& kt, const WeightConfig& w);
// Compact key identifying a k-tiling; equal keys iff equal k-tilings.
std::string canonical_key(const KTiling& kt);

}  // namespace aztec
