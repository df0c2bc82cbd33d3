#include "aztec/dynamics.hpp"

#include "aztec/errors.hpp"
#include "aztec/shuffle.hpp"

namespace aztec {

DynamicsFrame::DynamicsFrame(const ColoredParticleArray& a) : rank_(a.rank) {
  if (!a.has_valid_shape()) throw MalformedInput("particle array has the wrong shape");
  for (const ParticleLevels& c : a.colors) {
    auto levels = c.x;
    std::vector<HalfInt> vacuum;
    for (int i = 1; i <= rank_ + 1; ++i) vacuum.push_back(HalfInt::above(-i));
    levels.push_back(std::move(vacuum));
    x_.push_back(std::move(levels));
  }
}

HalfInt DynamicsFrame::ytilde(int l, int n, int i) const {
  if (i == n) return HalfInt::above(-n);
  return x_[l][n - 2][i - 1];
}

Move DynamicsFrame::move(int l, int n, int i) const {
  HalfInt xi = x(l, n, i);
  if (i < n && xi == ytilde(l, n, i) - 1) return Move::forced_jump;
  if (i > 1 && xi == ytilde(l, n, i - 1) - 1) return Move::forced_stay;
  return Move::free;
}

int DynamicsFrame::t_power(int l, int n, int i) const {
  HalfInt xi = x(l, n, i);
  int count = 0;
  for (int m = 0; m < colors(); ++m) {
    if (m == l) continue;
    HalfInt target = m > l ? xi : xi + 1;
    for (int j = 1; j <= n; ++j) {
      if (ytilde(m, n, j) <= target && target <= x(m, n, j)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

ColoredParticleArray parallel_update(const ColoredParticleArray& a, const WeightConfig& w,
                                     const RngStream& rng) {
  DynamicsFrame frame(a);
  int N = a.rank;
  w.validate(N + 1);
  ColoredParticleArray out;
  out.rank = N + 1;
  for (int l = 0; l < frame.colors(); ++l) {
    ParticleLevels next;
    for (int n = 1; n <= N + 1; ++n) {
      std::vector<HalfInt> xs;
      std::vector<HalfInt> ys;
      for (int i = 1; i < n; ++i) ys.push_back(frame.ytilde(l, n, i));
      double weight = w.c[n - 1] * w.b[N + 1 - n];
      for (int i = 1; i <= n; ++i) {
        HalfInt xi = frame.x(l, n, i);
        bool jump = false;
        switch (frame.move(l, n, i)) {
          case Move::forced_jump: jump = true; break;
          case Move::forced_stay: jump = false; break;
          case Move::free: {
            double p = creation_probability(weight, w.t, w.t_infinite, frame.t_power(l, n, i));
            double u = rng.uniform(static_cast<std::uint64_t>(N), static_cast<std::uint32_t>(l),
                                   static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(i));
            jump = u < p;
            break;
          }
        }
        xs.push_back(jump ? xi + 1 : xi);
      }
      next.x.push_back(std::move(xs));
      next.y.push_back(std::move(ys));
    }
    out.colors.push_back(std::move(next));
  }
  if (!out.satisfies_interlacing() || !out.satisfies_bounds())
    throw InvariantViolation("particle update broke interlacing");
  return out;
}

ColoredParticleArray empty_array(int colors) {
  if (colors < 1) throw ConfigError("need at least one color");
  ColoredParticleArray a;
  a.colors.resize(colors);
  return a;
}

ColoredParticleArray sample_dynamics(int rank, int colors, const WeightConfig& w,
                                     const RngStream& rng, const ArrayObserver& observer) {
  if (rank < 0) throw ConfigError("rank must be non-negative");
  w.validate(rank);
  ColoredParticleArray a = empty_array(colors);
  for (int r = 0; r < rank; ++r) {
    a = parallel_update(a, w, rng);
    if (observer) observer(a);
  }
  return a;
}

}  // namespace aztec
