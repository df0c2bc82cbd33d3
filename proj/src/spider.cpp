#include "aztec/spider.hpp"

#include <cstdlib>
#include <map>

#include "aztec/errors.hpp"
#include "aztec/geometry.hpp"

namespace aztec {

namespace {

enum Corner : std::uint8_t { BL = 1, BR = 2, TL = 4, TR = 8 };

// One local configuration of a single color. Edges are bits a=1 b=2 c=4 d=8;
// `loose` holds the corners matched outside the cell (before) or by pendant
// edges (after).
struct Local {
  std::uint8_t edges;
  std::uint8_t loose;
};

constexpr std::uint8_t EA = 1, EB = 2, EC = 4, ED = 8;
constexpr std::uint8_t ALL = BL | BR | TL | TR;

std::vector<Local> before_configs(Boundary b) {
  switch (b) {
    case Boundary::right: return {{ED, TR | BR}};
    case Boundary::left: return {{EB, BL | TL}};
    case Boundary::up: return {{EC, TL | TR}};
    case Boundary::down: return {{EA, BL | BR}};
    case Boundary::creation: return {{0, ALL}};
    case Boundary::destruction: return {{EA | EC, 0}, {EB | ED, 0}};
  }
  return {};
}

std::vector<Local> after_configs(Boundary b) {
  switch (b) {
    case Boundary::right: return {{EB, BL | TL}};
    case Boundary::left: return {{ED, BR | TR}};
    case Boundary::up: return {{EA, BL | BR}};
    case Boundary::down: return {{EC, TL | TR}};
    case Boundary::creation: return {{EA | EC, 0}, {EB | ED, 0}};
    case Boundary::destruction: return {{0, ALL}};
  }
  return {};
}

Rational edge_product(const CellWeights& w, std::uint8_t edges) {
  Rational p(1);
  if (edges & EA) p *= w.a;
  if (edges & EB) p *= w.b;
  if (edges & EC) p *= w.c;
  if (edges & ED) p *= w.d;
  return p;
}

int before_interactions(const Local& blue, const Local& red) {
  int n = 0;
  if ((blue.edges & EA) && (red.edges & EA)) ++n;
  if ((blue.edges & EB) && (red.edges & EC)) ++n;
  if ((blue.edges & EA) && (red.loose & TL)) ++n;
  return n;
}

int after_interactions(const Local& blue, const Local& red) {
  int n = 0;
  if ((blue.edges & EC) && (red.edges & EC)) ++n;
  if ((blue.edges & EC) && (red.edges & ED)) ++n;
  if ((blue.loose & TR) && (red.edges & EA)) ++n;
  return n;
}

bool creates_or_moves_back(Boundary b, Boundary pole) {
  return b == pole || b == Boundary::left || b == Boundary::down;
}

bool in_class(Boundary blue, Boundary red, Boundary pole) {
  return (blue == pole && creates_or_moves_back(red, pole)) ||
         (red == pole && creates_or_moves_back(blue, pole));
}

Local observed(const Tiling& t, int x, int y) {
  Face bl{x - 1, y - 1}, br{x, y - 1}, tl{x - 1, y};
  Local s{0, 0};
  if (t.role(tl) == Role::h_left) s.edges |= EA;
  if (t.role(br) == Role::v_bottom) s.edges |= EB;
  if (t.role(bl) == Role::h_left) s.edges |= EC;
  if (t.role(bl) == Role::v_bottom) s.edges |= ED;
  std::uint8_t matched = 0;
  if (s.edges & EA) matched |= TL | TR;
  if (s.edges & EB) matched |= BR | TR;
  if (s.edges & EC) matched |= BL | BR;
  if (s.edges & ED) matched |= BL | TL;
  s.loose = ALL & ~matched;
  return s;
}

Boundary boundary_of(const Local& s) {
  switch (s.edges) {
    case 0: return Boundary::creation;
    case EA: return Boundary::down;
    case EB: return Boundary::left;
    case EC: return Boundary::up;
    case ED: return Boundary::right;
    case EA | EC:
    case EB | ED: return Boundary::destruction;
    default: throw InvariantViolation("cell holds overlapping dominoes");
  }
}

template <typename F>
void for_each_cell(int rank, F&& f) {
  for (int y = -rank; y <= rank; ++y)
    for (int x = -rank; x <= rank; ++x) {
      if (std::abs(x) + std::abs(y) > rank) continue;
      if (((x + y - rank) % 2 + 2) % 2 != 0) continue;
      f(x, y);
    }
}

}  // namespace

std::string boundary_name(Boundary b) {
  switch (b) {
    case Boundary::creation: return "c";
    case Boundary::destruction: return "d";
    case Boundary::right: return "right";
    case Boundary::left: return "left";
    case Boundary::up: return "up";
    case Boundary::down: return "down";
  }
  return "?";
}

BoundaryClass classify_pair(Boundary blue, Boundary red) {
  if (in_class(blue, red, Boundary::creation)) return BoundaryClass::C;
  if (in_class(blue, red, Boundary::destruction)) return BoundaryClass::D;
  return BoundaryClass::neither;
}

Rational spider_delta(const CellWeights& w) { return w.a * w.c + w.b * w.d; }

CellWeights spider_transform(const CellWeights& w) {
  Rational D = spider_delta(w);
  if (D == 0) throw ConfigError("degenerate cell weights");
  return {w.c / D, w.d / D, w.a / D, w.b / D};
}

Rational spider_gamma(const CellWeights& w, const Rational& t) {
  Rational den = w.a * w.c * t + w.b * w.d;
  if (den == 0) throw ConfigError("degenerate cell weights");
  return spider_delta(w) / den;
}

Rational local_Z(const CellWeights& w, Boundary blue, Boundary red, Side side, const Rational& t) {
  bool before = side == Side::before;
  auto bs = before ? before_configs(blue) : after_configs(blue);
  auto rs = before ? before_configs(red) : after_configs(red);
  Rational z(0);
  for (const Local& p : bs)
    for (const Local& q : rs) {
      int k = before ? before_interactions(p, q) : after_interactions(p, q);
      z += edge_product(w, p.edges) * edge_product(w, q.edges) * rational_pow(t, k);
    }
  return z;
}

SpiderReport verify_spider_relations(const CellWeights& w, const Rational& t) {
  SpiderReport r;
  CellWeights wp = spider_transform(w);
  Rational D = spider_delta(w);
  Rational G = spider_gamma(w, t);
  for (Boundary blue : all_boundaries)
    for (Boundary red : all_boundaries) {
      SpiderCheck c{blue, red, classify_pair(blue, red), local_Z(w, blue, red, Side::before, t), Rational(0),
                    false};
      Rational pred = D * D * local_Z(wp, blue, red, Side::after, t);
      if (c.cls == BoundaryClass::C) pred *= G;
      if (c.cls == BoundaryClass::D) pred /= G;
      c.after = pred;
      c.pass = c.before == pred;
      r.all_pass = r.all_pass && c.pass;
      r.checks.push_back(std::move(c));
    }
  return r;
}

std::vector<CellState> cell_states(const Tiling& t) {
  std::vector<CellState> out;
  for_each_cell(t.rank(), [&](int x, int y) { out.push_back({x, y, boundary_of(observed(t, x, y))}); });
  return out;
}

int cell_interactions(const Tiling& lower, const Tiling& upper) {
  if (lower.rank() != upper.rank()) throw ConfigError("tilings of different rank");
  int n = 0;
  for_each_cell(lower.rank(),
                [&](int x, int y) { n += before_interactions(observed(lower, x, y), observed(upper, x, y)); });
  return n;
}

bool diagonal_count_check(const KTiling& kt) {
  for (int p = 0; p < kt.colors(); ++p)
    for (int q = p + 1; q < kt.colors(); ++q) {
      auto sp = cell_states(kt.color(p));
      auto sq = cell_states(kt.color(q));
      std::map<int, int> excess;
      for (std::size_t i = 0; i < sp.size(); ++i) {
        int diag = sp[i].y - sp[i].x;
        excess.try_emplace(diag, 0);
        switch (classify_pair(sp[i].boundary, sq[i].boundary)) {
          case BoundaryClass::C: ++excess[diag]; break;
          case BoundaryClass::D: --excess[diag]; break;
          case BoundaryClass::neither: break;
        }
      }
      for (const auto& [diag, e] : excess)
        if (e != 1) return false;
    }
  return true;
}

}  // namespace aztec
