#include "aztec/shuffle.hpp"

#include <string>

#include "aztec/errors.hpp"

namespace aztec {

int creation_weight_index(Face ll, int new_rank, DiagonalConvention conv) {
  int d = diagonal(ll, new_rank);
  int i = conv == DiagonalConvention::odd_lower_left ? (d + 1) / 2 : d / 2;
  if (i < 1 || i > new_rank)
    throw ConfigError("block on diagonal " + std::to_string(d) + " has no weight index");
  return i;
}

double creation_probability(double weight, double t, bool t_infinite, int exponent) {
  if (t_infinite) return exponent > 0 ? 1.0 : weight / (1.0 + weight);
  double x = weight;
  for (int e = 0; e < exponent; ++e) x *= t;
  return x / (1.0 + x);
}

PartialTiling slide_destroy(const Tiling& t) {
  if (!validate(t)) throw MalformedInput("cannot shuffle an invalid tiling");
  int old_rank = t.rank();
  int rank = old_rank + 1;
  FaceBox box(rank);
  PartialTiling out;
  out.rank = rank;
  out.roles.assign(box.size(), Role::outside);
  for (std::size_t i = 0; i < out.roles.size(); ++i)
    if (in_diamond(box.face(i), rank)) out.roles[i] = Role::empty;

  auto put = [&](Face f, Role r) {
    if (!box.contains(f) || out.roles[box.index(f)] != Role::empty)
      throw InvariantViolation("sliding domino left the diamond or hit another domino");
    out.roles[box.index(f)] = r;
  };

  for (const Domino& d : t.dominoes()) {
    Face f = d.anchor;
    Face to;
    switch (classify(d, old_rank)) {
      case Compass::north:
        if (t.role(f.north()) == Role::h_left) continue;
        to = f.north();
        break;
      case Compass::south:
        if (t.role(f.south()) == Role::h_left) continue;
        to = f.south();
        break;
      case Compass::east:
        if (t.role(f.east()) == Role::v_bottom) continue;
        to = f.east();
        break;
      case Compass::west:
        if (t.role(f.west()) == Role::v_bottom) continue;
        to = f.west();
        break;
    }
    bool h = d.orientation == Orientation::horizontal;
    put(to, h ? Role::h_left : Role::v_bottom);
    put(h ? to.east() : to.north(), h ? Role::h_right : Role::v_top);
  }

  // The lowest-leftmost empty face of what is left must be a block corner.
  std::vector<char> claimed(box.size(), 0);
  for (std::size_t i = 0; i < out.roles.size(); ++i) {
    if (out.roles[i] != Role::empty || claimed[i]) continue;
    Face ll = box.face(i);
    for (Face f : {ll, ll.east(), ll.north(), ll.east().north()}) {
      if (!box.contains(f) || out.roles[box.index(f)] != Role::empty || claimed[box.index(f)])
        throw InvariantViolation("holes do not split into 2x2 blocks");
      claimed[box.index(f)] = 1;
    }
    if (diagonal(ll, rank) % 2 != 1) throw InvariantViolation("block on an even diagonal");
    out.holes.push_back(ll);
  }
  return out;
}

ShuffleFrame::ShuffleFrame(const KTiling& kt) : rank_(kt.rank() + 1) {
  FaceBox box(rank_);
  for (const Tiling& t : kt.tilings()) {
    PartialTiling p = slide_destroy(t);
    std::vector<std::int32_t> at(box.size(), -1);
    std::vector<Block> blocks;
    for (Face ll : p.holes) {
      auto id = static_cast<std::int32_t>(blocks.size());
      for (Face f : {ll, ll.east(), ll.north(), ll.east().north()}) at[box.index(f)] = id;
      blocks.push_back({ll, (diagonal(ll, rank_) + 1) / 2, 0});
    }
    // Index of each block's particle: one plus the particles strictly NE of it.
    for (int d = 1; d <= 2 * rank_; d += 2) {
      auto faces = faces_on_diagonal(d, rank_);
      int count = 0;
      for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
        std::size_t idx = box.index(*it);
        if (at[idx] >= 0) {
          Block& b = blocks[at[idx]];
          if (b.ll == *it) continue;
          b.index = ++count;
        } else {
          auto dom = domino_for_role(*it, p.roles[idx]);
          if (!dom) throw InvariantViolation("uncovered face outside every block");
          if (carries_particles(classify(*dom, rank_))) ++count;
        }
      }
    }
    roles_.push_back(std::move(p.roles));
    block_at_.push_back(std::move(at));
    fills_.emplace_back(blocks.size(), Fill::unfilled);
    unfilled_.push_back(blocks.size());
    blocks_.push_back(std::move(blocks));
  }
}

bool ShuffleFrame::is_block_ll(int l, Face f) const {
  FaceBox box(rank_);
  if (!box.contains(f)) return false;
  std::int32_t id = block_at_[l][box.index(f)];
  return id >= 0 && blocks_[l][id].ll == f;
}

int ShuffleFrame::creation_exponent(int l, std::size_t b) const {
  FaceBox box(rank_);
  Face ll = blocks_.at(l).at(b).ll;
  Face tr = ll.east().north();
  int e = 0;
  for (int m = l + 1; m < colors(); ++m) {
    Role r = roles_[m][box.index(ll)];
    if (r == Role::v_bottom || r == Role::h_left || is_block_ll(m, ll)) ++e;
  }
  for (int m = 0; m < l; ++m) {
    if (!color_filled(m)) throw InvariantViolation("smaller colors must be filled first");
    Role r = roles_[m][box.index(tr)];
    if (r == Role::h_left || r == Role::v_bottom) ++e;
  }
  return e;
}

void ShuffleFrame::fill(int l, std::size_t b, Fill f) {
  if (f == Fill::unfilled) throw ConfigError("cannot unfill a block");
  if (fills_.at(l).at(b) != Fill::unfilled) throw InvariantViolation("block filled twice");
  FaceBox box(rank_);
  Face ll = blocks_[l][b].ll;
  auto& roles = roles_[l];
  if (f == Fill::horizontal_pair) {
    roles[box.index(ll)] = Role::h_left;
    roles[box.index(ll.east())] = Role::h_right;
    roles[box.index(ll.north())] = Role::h_left;
    roles[box.index(ll.north().east())] = Role::h_right;
  } else {
    roles[box.index(ll)] = Role::v_bottom;
    roles[box.index(ll.north())] = Role::v_top;
    roles[box.index(ll.east())] = Role::v_bottom;
    roles[box.index(ll.east().north())] = Role::v_top;
  }
  fills_[l][b] = f;
  --unfilled_[l];
}

KTiling ShuffleFrame::finish() const {
  std::vector<Tiling> out;
  for (int l = 0; l < colors(); ++l) {
    if (!color_filled(l)) throw InvariantViolation("unfilled block left in the frame");
    Tiling t = Tiling::from_roles(rank_, roles_[l]);
    if (!validate(t)) throw InvariantViolation("shuffling produced an invalid tiling");
    out.push_back(std::move(t));
  }
  return KTiling(std::move(out));
}

KTiling shuffle_step(const KTiling& kt, const WeightConfig& w, const RngStream& rng,
                     const ShuffleOptions& opts) {
  ShuffleFrame frame(kt);
  int rank = frame.new_rank();
  w.validate(rank);
  auto step = static_cast<std::uint64_t>(kt.rank());
  for (int l = 0; l < frame.colors(); ++l) {
    const auto& blocks = frame.blocks(l);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      int e = frame.creation_exponent(l, b);
      if (opts.exponent_hook) e = opts.exponent_hook(l, e);
      int i = creation_weight_index(blocks[b].ll, rank, opts.convention);
      double weight = w.c[i - 1] * w.b[rank - i];
      double p = creation_probability(weight, w.t, w.t_infinite, e);
      double u = rng.uniform(step, static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(blocks[b].level),
                             static_cast<std::uint32_t>(blocks[b].index));
      frame.fill(l, b, u < p ? Fill::horizontal_pair : Fill::vertical_pair);
    }
  }
  return frame.finish();
}

KTiling empty_ktiling(int colors) {
  if (colors < 1) throw ConfigError("need at least one color");
  return KTiling(std::vector<Tiling>(colors, Tiling(0, {})));
}

KTiling sample_ktiling(int rank, int colors, const WeightConfig& w, const RngStream& rng,
                       const ShuffleOptions& opts, const StepObserver& observer) {
  if (rank < 0) throw ConfigError("rank must be non-negative");
  w.validate(rank);
  KTiling kt = empty_ktiling(colors);
  for (int r = 0; r < rank; ++r) {
    kt = shuffle_step(kt, w, rng, opts);
    if (observer) observer(kt.rank(), kt);
  }
  return kt;
}

}  // namespace aztec
