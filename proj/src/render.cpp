#include "aztec/render.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

#include "aztec/errors.hpp"
#include "aztec/partitions.hpp"

namespace aztec {

namespace {

constexpr int margin_cells = 1;

const char* compass_fill_color(Compass c) {
  switch (c) {
    case Compass::north: return "#f2c14e";
    case Compass::south: return "#3f7f6b";
    case Compass::east: return "#d9534f";
    case Compass::west: return "#4a6fd1";
  }
  return "#000000";
}

struct Panel {
  std::ostringstream& out;
  int rank;
  int px;
  int ox;  // panel origin in pixels
  int oy;

  int sx(int u) const { return ox + (u + rank) * px; }
  // screen y of the top edge of row v
  int sy(int v) const { return oy + (rank - v - 1) * px; }
};

void draw_frame(const Panel& p) {
  int N = p.rank;
  if (N == 0) {
    p.out << "  <path class=\"frame\" d=\"M " << p.ox << ' ' << p.oy << " Z\" fill=\"none\" stroke=\"#000000\"/>\n";
    return;
  }
  // Lattice corners of the staircase boundary, counterclockwise from the bottom row.
  std::vector<std::pair<int, int>> pts{{-1, -N}, {1, -N}};
  auto step = [&](int dx, int dy) { pts.emplace_back(pts.back().first + dx, pts.back().second + dy); };
  for (int k = 1; k < N; ++k) step(0, 1), step(1, 0);
  step(0, 2);
  for (int k = 1; k < N; ++k) step(-1, 0), step(0, 1);
  step(-2, 0);
  for (int k = 1; k < N; ++k) step(0, -1), step(-1, 0);
  step(0, -2);
  for (int k = 1; k < N; ++k) step(1, 0), step(0, -1);
  pts.pop_back();
  p.out << "  <path class=\"frame\" d=\"";
  for (std::size_t i = 0; i < pts.size(); ++i)
    p.out << (i ? " L " : "M ") << p.ox + (pts[i].first + N) * p.px << ' ' << p.oy + (N - pts[i].second) * p.px;
  p.out << " Z\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
}

void draw_checkerboard(const Panel& p, const ParityConvention& parity) {
  std::ostringstream d;
  bool any = false;
  for (Face f : faces_of_rank(p.rank)) {
    if (parity.shade(f, p.rank) != Shade::gray) continue;
    if (any) d << ' ';
    d << 'M' << p.sx(f.u) << ' ' << p.sy(f.v) << "h" << p.px << "v" << p.px << "h" << -p.px << "Z";
    any = true;
  }
  if (any) p.out << "  <path class=\"shade\" d=\"" << d.str() << "\" fill=\"#d8d8d8\"/>\n";
}

void draw_dominoes(const Panel& p, const Tiling& t, int color, const RenderOptions& opts, bool overlay) {
  const std::string& stroke = opts.palette[color];
  for (const Domino& dm : t.dominoes()) {
    bool h = dm.orientation == Orientation::horizontal;
    int x = p.sx(dm.anchor.u);
    int y = h ? p.sy(dm.anchor.v) : p.sy(dm.anchor.v + 1);
    p.out << "  <rect class=\"domino\" data-color=\"" << color << "\" data-u=\"" << dm.anchor.u << "\" data-v=\""
          << dm.anchor.v << "\" data-o=\"" << (h ? 'h' : 'v') << "\" x=\"" << x << "\" y=\"" << y << "\" width=\""
          << (h ? 2 : 1) * p.px << "\" height=\"" << (h ? 1 : 2) * p.px << '"';
    if (opts.compass_fill)
      p.out << " fill=\"" << compass_fill_color(classify(dm, t.rank(), opts.parity)) << "\" stroke=\"none\"";
    else if (overlay)
      p.out << " fill=\"none\" stroke=\"" << stroke << '"';
    else
      p.out << " fill=\"" << stroke << "\" fill-opacity=\"0.25\" stroke=\"" << stroke << '"';
    p.out << " stroke-width=\"1\"/>\n";
  }
}

void draw_particles(const Panel& p, const ParticleLevels& levels, int color, const RenderOptions& opts) {
  int N = p.rank;
  double r = p.px * 0.25;
  auto dot = [&](int d, HalfInt x) {
    int u = (x.twice() - 1) / 2;
    int v = d + u - N;
    p.out << "  <circle class=\"particle\" data-color=\"" << color << "\" data-u=\"" << u << "\" data-v=\"" << v
          << "\" cx=\"" << p.sx(u) + p.px / 2.0 << "\" cy=\"" << p.sy(v) + p.px / 2.0 << "\" r=\"" << r
          << "\" fill=\"" << opts.palette[color] << "\"/>\n";
  };
  for (int n = 1; n <= N; ++n) {
    for (HalfInt x : levels.x[n - 1]) dot(2 * n - 1, x);
    for (HalfInt y : levels.y[n - 1]) dot(2 * n - 2, y);
  }
}

}  // namespace

std::string to_svg(const KTiling& kt, const RenderOptions& opts) {
  if (opts.cell_px <= 0) throw ConfigError("cell size must be positive");
  if (static_cast<int>(opts.palette.size()) < kt.colors()) throw ConfigError("palette has fewer entries than colors");
  for (const Tiling& t : kt.tilings())
    if (!validate(t)) throw MalformedInput("cannot render an invalid tiling");

  int N = kt.rank();
  int px = opts.cell_px;
  int side = 2 * N * px;
  int gap = margin_cells * px;
  int panels = opts.layout == Layout::panels ? std::max(1, kt.colors()) : 1;
  int width = panels * side + (panels + 1) * gap;
  int height = side + 2 * gap;

  ColoredParticleArray particles;
  if (opts.show_particles) particles = ktiling_to_array(kt);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" data-rank=\"" << N << "\" data-colors=\""
      << kt.colors() << "\">\n";
  out << "  <path class=\"background\" d=\"M 0 0 H " << width << " V " << height << " H 0 Z\" fill=\"#ffffff\"/>\n";

  auto panel_at = [&](int i) { return Panel{out, N, px, gap + i * (side + gap), gap}; };
  if (opts.layout == Layout::panels) {
    for (int l = 0; l < kt.colors(); ++l) {
      Panel p = panel_at(l);
      out << " <g class=\"panel\" data-color=\"" << l << "\">\n";
      if (opts.checkerboard && !opts.compass_fill) draw_checkerboard(p, opts.parity);
      draw_dominoes(p, kt.color(l), l, opts, false);
      if (opts.show_particles) draw_particles(p, particles.colors[l], l, opts);
      draw_frame(p);
      out << " </g>\n";
    }
    if (kt.colors() == 0) draw_frame(panel_at(0));
  } else {
    Panel p = panel_at(0);
    out << " <g class=\"overlay\">\n";
    if (opts.checkerboard && !opts.compass_fill) draw_checkerboard(p, opts.parity);
    for (int l = 0; l < kt.colors(); ++l) draw_dominoes(p, kt.color(l), l, opts, true);
    if (opts.show_particles)
      for (int l = 0; l < kt.colors(); ++l) draw_particles(p, particles.colors[l], l, opts);
    draw_frame(p);
    out << " </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace aztec
