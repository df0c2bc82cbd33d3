#include "aztec/partitions.hpp"

#include <algorithm>

#include "aztec/errors.hpp"

namespace aztec {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ConfigError("partition parts must be non-negative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ConfigError("partition parts must be non-increasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool interlaces(const Partition& mu, const Partition& lambda) {
  int n = std::max(mu.length(), lambda.length()) + 1;
  for (int i = 1; i <= n; ++i)
    if (lambda.part(i) < mu.part(i) || mu.part(i) < lambda.part(i + 1)) return false;
  return true;
}

bool co_interlaces(const Partition& lambda, const Partition& mu) {
  return interlaces(mu.conjugate(), lambda.conjugate());
}

std::vector<HalfInt> maya_positions(const Partition& p, int count) {
  std::vector<HalfInt> out;
  out.reserve(count);
  for (int i = 1; i <= count; ++i) out.push_back(HalfInt::above(p.part(i) - i));
  return out;
}

Partition from_maya(const std::vector<HalfInt>& positions) {
  std::vector<int> parts;
  parts.reserve(positions.size());
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (k > 0 && !(positions[k] < positions[k - 1]))
      throw MalformedInput("particle positions must be strictly decreasing");
    int i = static_cast<int>(k) + 1;
    int part = (positions[k].twice() - 1) / 2 + i;
    if (part < 0) throw MalformedInput("particle position below the vacuum");
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

std::string maya_diagram(const Partition& p, HalfInt lo, HalfInt hi) {
  std::string s;
  int count = std::max(p.length(), -((lo.twice() - 1) / 2)) + 1;
  auto pos = maya_positions(p, count);
  for (HalfInt x = lo; x <= hi; x = x + 1)
    s.push_back(std::find(pos.begin(), pos.end(), x) != pos.end() ? '*' : 'o');
  return s;
}

bool InterlacedSequence::is_valid() const {
  int n_max = rank;
  if (static_cast<int>(lambda.size()) != n_max || static_cast<int>(mu.size()) != n_max + 1) return false;
  if (mu.front().length() != 0 || mu.back().length() != 0) return false;
  for (int n = 1; n <= n_max; ++n) {
    const Partition& l = lambda[n - 1];
    if (l.length() > n || l.part(1) > n_max - n + 1) return false;
    if (mu[n - 1].length() > n - 1 || mu[n - 1].part(1) > n_max - n + 1) return false;
    if (!interlaces(mu[n - 1], l) || !co_interlaces(l, mu[n])) return false;
  }
  return true;
}

std::vector<HalfInt> slice_particles(const Tiling& t, int d) {
  std::vector<HalfInt> out;
  for (const Face& f : faces_on_diagonal(d, t.rank())) {
    auto dom = t.domino_at(f);
    if (!dom) throw MalformedInput("face not covered by any domino");
    if (carries_particles(classify(*dom, t.rank()))) out.push_back(f.center_x());
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

std::vector<HalfInt> checked_slice(const Tiling& t, int d, int expected) {
  auto p = slice_particles(t, d);
  if (static_cast<int>(p.size()) != expected)
    throw InvariantViolation("diagonal " + std::to_string(d) + " carries " + std::to_string(p.size()) +
                             " particles, expected " + std::to_string(expected));
  return p;
}

}  // namespace

InterlacedSequence tiling_to_sequence(const Tiling& t) {
  if (!validate(t)) throw MalformedInput("not a valid tiling");
  InterlacedSequence s;
  s.rank = t.rank();
  for (int n = 1; n <= t.rank() + 1; ++n) {
    s.mu.push_back(from_maya(checked_slice(t, 2 * n - 2, n - 1)));
    if (n <= t.rank()) s.lambda.push_back(from_maya(checked_slice(t, 2 * n - 1, n)));
  }
  return s;
}

namespace {

// Rebuild a tiling from the particle/hole status of every face.
Tiling tiling_from_occupation(int rank, const std::vector<char>& particle) {
  FaceBox box(rank);
  ParityConvention conv;
  std::vector<Role> roles(box.size(), Role::outside);
  for (std::size_t i = 0; i < roles.size(); ++i)
    if (in_diamond(box.face(i), rank)) roles[i] = Role::empty;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] != Role::empty) continue;
    Face f = box.face(i);
    bool gray = conv.shade(f, rank) == Shade::gray;
    bool part = particle[i];
    // The lowest-leftmost free face is the anchor of its domino.
    bool horizontal = gray == part;
    Face g = horizontal ? f.east() : f.north();
    if (!box.contains(g) || roles[box.index(g)] != Role::empty || particle[box.index(g)] != part)
      throw MalformedInput("occupation numbers do not describe a tiling");
    roles[i] = horizontal ? Role::h_left : Role::v_bottom;
    roles[box.index(g)] = horizontal ? Role::h_right : Role::v_top;
  }
  return Tiling::from_roles(rank, std::move(roles));
}

void mark_slice(int rank, int d, const std::vector<HalfInt>& pos, std::vector<char>& particle) {
  FaceBox box(rank);
  auto faces = faces_on_diagonal(d, rank);
  std::size_t hits = 0;
  for (const Face& f : faces) {
    bool p = std::find(pos.begin(), pos.end(), f.center_x()) != pos.end();
    particle[box.index(f)] = p;
    hits += p;
  }
  if (hits != pos.size()) throw MalformedInput("particle outside its diagonal");
}

}  // namespace

Tiling sequence_to_tiling(const InterlacedSequence& s) {
  if (!s.is_valid()) throw MalformedInput("not an interlaced sequence");
  int rank = s.rank;
  std::vector<char> particle(FaceBox(rank).size(), 0);
  for (int n = 1; n <= rank + 1; ++n) {
    mark_slice(rank, 2 * n - 2, maya_positions(s.mu[n - 1], n - 1), particle);
    if (n <= rank) mark_slice(rank, 2 * n - 1, maya_positions(s.lambda[n - 1], n), particle);
  }
  return tiling_from_occupation(rank, particle);
}

int interactions_from_partitions(const InterlacedSequence& a, const InterlacedSequence& b) {
  if (a.rank != b.rank) throw ConfigError("sequences have different ranks");
  int total = 0;
  for (int n = 1; n <= a.rank; ++n) {
    const Partition& la = a.lambda[n - 1];
    const Partition& lb = b.lambda[n - 1];
    const Partition& ma = a.mu[n - 1];
    const Partition& mb = b.mu[n - 1];
    const Partition& na = a.mu[n];
    const Partition& nb = b.mu[n];
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        int lo = std::min(lb.part(j) - j, la.part(i) - i);
        int hi = std::max(mb.part(j) - j, ma.part(i) - i);
        if (lo - hi >= 0) total += lo - hi + (lb.part(j) - j < la.part(i) - i ? 1 : 0);
        int v = lb.part(j) - j;
        if (v == nb.part(j) - j + 1 && v == na.part(i) - i && v == la.part(i) - i) ++total;
      }
    }
  }
  return total;
}

bool ColoredParticleArray::has_valid_shape() const {
  for (const ParticleLevels& c : colors) {
    if (static_cast<int>(c.x.size()) != rank || static_cast<int>(c.y.size()) != rank) return false;
    for (int n = 1; n <= rank; ++n)
      if (static_cast<int>(c.x[n - 1].size()) != n || static_cast<int>(c.y[n - 1].size()) != n - 1)
        return false;
  }
  return true;
}

bool ColoredParticleArray::satisfies_interlacing() const {
  if (!has_valid_shape()) return false;
  for (const ParticleLevels& c : colors) {
    for (int n = 1; n <= rank; ++n) {
      const auto& x = c.x[n - 1];
      const auto& y = c.y[n - 1];
      for (int i = 1; i < n; ++i)
        if (!(x[i - 1] >= y[i - 1] && y[i - 1] > x[i])) return false;
      for (int i = 1; i <= n; ++i) {
        HalfInt next = n < rank ? c.y[n][i - 1] : HalfInt::above(-i);
        if (!(x[i - 1] >= next && next >= x[i - 1] - 1)) return false;
      }
    }
  }
  return true;
}

bool ColoredParticleArray::satisfies_bounds() const {
  if (!has_valid_shape()) return false;
  for (const ParticleLevels& c : colors) {
    for (int n = 1; n <= rank; ++n) {
      for (HalfInt x : c.x[n - 1])
        if (x < HalfInt::above(-n) || x > HalfInt::above(rank - n)) return false;
      for (HalfInt y : c.y[n - 1])
        if (y < HalfInt::above(1 - n) || y > HalfInt::above(rank - n)) return false;
    }
  }
  return true;
}

ParticleLevels tiling_to_levels(const Tiling& t) {
  if (!validate(t)) throw MalformedInput("not a valid tiling");
  ParticleLevels p;
  for (int n = 1; n <= t.rank(); ++n) {
    p.x.push_back(checked_slice(t, 2 * n - 1, n));
    p.y.push_back(checked_slice(t, 2 * n - 2, n - 1));
  }
  return p;
}

ColoredParticleArray ktiling_to_array(const KTiling& kt) {
  ColoredParticleArray a;
  a.rank = kt.rank();
  for (const Tiling& t : kt.tilings()) a.colors.push_back(tiling_to_levels(t));
  return a;
}

KTiling array_to_ktiling(const ColoredParticleArray& a) {
  if (!a.satisfies_interlacing() || !a.satisfies_bounds())
    throw MalformedInput("particle array violates interlacing or bounds");
  std::vector<Tiling> colors;
  for (const ParticleLevels& c : a.colors) {
    std::vector<char> particle(FaceBox(a.rank).size(), 0);
    for (int n = 1; n <= a.rank; ++n) {
      mark_slice(a.rank, 2 * n - 1, c.x[n - 1], particle);
      mark_slice(a.rank, 2 * n - 2, c.y[n - 1], particle);
    }
    std::vector<HalfInt> top;
    for (int i = 1; i <= a.rank; ++i) top.push_back(HalfInt::above(-i));
    mark_slice(a.rank, 2 * a.rank, top, particle);
    colors.push_back(tiling_from_occupation(a.rank, particle));
  }
  return KTiling(std::move(colors));
}

}  // namespace aztec
