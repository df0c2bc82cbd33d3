#include "aztec/tiling.hpp"

#include <cmath>

#include "aztec/errors.hpp"

namespace aztec {

Compass classify(const Domino& d, int rank, const ParityConvention& conv) {
  bool gray = conv.shade(d.anchor, rank) == Shade::gray;
  if (d.orientation == Orientation::horizontal) return gray ? Compass::north : Compass::south;
  return gray ? Compass::east : Compass::west;
}

char compass_letter(Compass c) {
  switch (c) {
    case Compass::north: return 'N';
    case Compass::south: return 'S';
    case Compass::east: return 'E';
    default: return 'W';
  }
}

namespace {

std::vector<Role> blank_roles(int rank) {
  FaceBox box(rank);
  std::vector<Role> roles(box.size(), Role::outside);
  for (std::size_t i = 0; i < roles.size(); ++i)
    if (in_diamond(box.face(i), rank)) roles[i] = Role::empty;
  return roles;
}

}  // namespace

Tiling::Tiling(int rank, const std::vector<Domino>& dominoes) : rank_(rank) {
  if (rank < 0) throw ConfigError("rank must be non-negative");
  FaceBox box(rank);
  roles_ = blank_roles(rank);
  auto place = [&](Face f, Role r) {
    if (!box.contains(f) || roles_[box.index(f)] != Role::empty) {
      valid_ = false;
      return;
    }
    roles_[box.index(f)] = r;
  };
  for (const Domino& d : dominoes) {
    bool h = d.orientation == Orientation::horizontal;
    place(d.anchor, h ? Role::h_left : Role::v_bottom);
    place(d.second(), h ? Role::h_right : Role::v_top);
  }
  for (Role r : roles_)
    if (r == Role::empty) valid_ = false;
}

Tiling Tiling::from_roles(int rank, std::vector<Role> roles) {
  Tiling t;
  t.rank_ = rank;
  t.roles_ = std::move(roles);
  if (t.roles_.size() != FaceBox(rank).size()) throw InvariantViolation("role grid has wrong size");
  for (Role r : t.roles_)
    if (r == Role::empty) t.valid_ = false;
  return t;
}

Role Tiling::role(Face f) const {
  FaceBox box(rank_);
  if (!box.contains(f)) return Role::outside;
  return roles_[box.index(f)];
}

std::optional<Domino> domino_for_role(Face f, Role r) {
  switch (r) {
    case Role::h_left: return Domino{f, Orientation::horizontal};
    case Role::h_right: return Domino{f.west(), Orientation::horizontal};
    case Role::v_bottom: return Domino{f, Orientation::vertical};
    case Role::v_top: return Domino{f.south(), Orientation::vertical};
    default: return std::nullopt;
  }
}

std::optional<Domino> Tiling::domino_at(Face f) const { return domino_for_role(f, role(f)); }

std::vector<Domino> Tiling::dominoes() const {
  std::vector<Domino> out;
  out.reserve(roles_.size() / 2);
  FaceBox box(rank_);
  for (std::size_t i = 0; i < roles_.size(); ++i) {
    if (roles_[i] == Role::h_left) out.push_back({box.face(i), Orientation::horizontal});
    else if (roles_[i] == Role::v_bottom) out.push_back({box.face(i), Orientation::vertical});
  }
  return out;
}

bool validate(const Tiling& t) { return t.is_valid(); }

WeightConfig WeightConfig::uniform(int rank, double t) {
  WeightConfig w;
  w.c.assign(rank, 1.0);
  w.b.assign(rank, 1.0);
  w.t = t;
  return w;
}

void WeightConfig::validate(int rank) const {
  if (static_cast<int>(c.size()) < rank || static_cast<int>(b.size()) < rank)
    throw ConfigError("weight tuples must have at least " + std::to_string(rank) + " entries");
  for (double x : c)
    if (!(x > 0) || !std::isfinite(x)) throw ConfigError("c weights must be positive and finite");
  for (double x : b)
    if (!(x > 0) || !std::isfinite(x)) throw ConfigError("b weights must be positive and finite");
  if (!t_infinite && (!(t >= 0) || !std::isfinite(t)))
    throw ConfigError("t must be a non-negative finite number");
}

WeightFactor weight_factor(const Domino& d, int rank) {
  if (d.orientation == Orientation::vertical) return {};
  int diag = diagonal(d.anchor, rank);
  if (!in_diamond(d.second(), rank) || diag == 0)
    throw ConfigError("horizontal domino does not fit in the diamond");
  if (diag % 2 == 1) return {WeightFactor::Kind::c, (diag + 1) / 2};
  return {WeightFactor::Kind::b, rank - diag / 2 + 1};
}

double domino_weight(const Domino& d, const WeightConfig& w, int rank) {
  return weight_value(weight_factor(d, rank), w.c, w.b);
}

double tiling_weight(const Tiling& t, const WeightConfig& w) {
  return tiling_weight_as(t, w.c, w.b);
}

int count_interactions(const Tiling& lower, const Tiling& upper) {
  if (lower.rank() != upper.rank()) throw ConfigError("tilings have different ranks");
  int rank = lower.rank();
  int count = 0;
  for (const Domino& d : lower.dominoes()) {
    Compass c = classify(d, rank);
    Face f = d.anchor;
    if (c == Compass::south) {
      if (upper.role(f) == Role::h_left) ++count;         // same S domino
      if (upper.role(f.west()) == Role::h_left) ++count;  // N shifted one step west
      if (upper.role(f) == Role::v_bottom) ++count;       // W on the left face
    } else if (c == Compass::west) {
      if (upper.role(f.west()) == Role::h_left) ++count;  // N ending on the bottom face
    }
  }
  return count;
}

KTiling::KTiling(std::vector<Tiling> colors) : colors_(std::move(colors)) {
  for (const Tiling& t : colors_)
    if (t.rank() != colors_.front().rank()) throw ConfigError("colors have different ranks");
}

int total_interactions(const KTiling& kt) {
  int n = 0;
  for (int a = 0; a < kt.colors(); ++a)
    for (int b = a + 1; b < kt.colors(); ++b) n += count_interactions(kt.color(a), kt.color(b));
  return n;
}

double ktiling_weight(const KTiling& kt, const WeightConfig& w) {
  double out = 1.0;
  for (const Tiling& t : kt.tilings()) out *= tiling_weight(t, w);
  return out * std::pow(w.t, total_interactions(kt));
}

std::string canonical_key(const KTiling& kt) {
  std::string key = std::to_string(kt.rank());
  for (const Tiling& t : kt.tilings()) {
    key.push_back('|');
    for (Role r : t.roles())
      if (r != Role::outside) key.push_back(static_cast<char>('a' + static_cast<int>(r)));
  }
  return key;
}

}  // namespace aztec
