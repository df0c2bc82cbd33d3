#pragma once

#include <string>
#include <vector>

#include "aztec/geometry.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

enum class Layout { panels, overlay };

struct RenderOptions {
  Layout layout = Layout::panels;
  int cell_px = 12;
  std::vector<std::string> palette = {"#1f5fbf", "#c8322b", "#2e9a44", "#8e44ad",
                                      "#e08a1e", "#17a2b8", "#6d4c41", "#555555"};
  bool show_particles = false;
  // Fill dominoes by N/S/E/W type instead of by color; frozen corners show up as flat regions.
  bool compass_fill = false;
  bool checkerboard = true;
  ParityConvention parity{};
};

// SVG 1.1. Each face is cell_px square; the origin is the SW corner of the
// diamond's bounding box and y grows downward. One <rect class="domino"> per
// domino with data-color, data-u, data-v, data-o attributes.
std::string to_svg(const KTiling& kt, const RenderOptions& opts = {});

}  // namespace aztec
