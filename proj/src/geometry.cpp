#include "aztec/geometry.hpp"

#include <cstdlib>
#include <string>

#include "aztec/errors.hpp"

namespace aztec {

bool in_diamond(Face f, int rank) {
  return std::abs(2 * f.u + 1) + std::abs(2 * f.v + 1) <= 2 * rank;
}

std::size_t face_count(int rank) { return 2 * static_cast<std::size_t>(rank) * (rank + 1); }

std::vector<Face> faces_of_rank(int rank) {
  if (rank < 0) throw ConfigError("rank must be non-negative");
  std::vector<Face> out;
  out.reserve(face_count(rank));
  for (int v = -rank; v < rank; ++v)
    for (int u = -rank; u < rank; ++u)
      if (in_diamond({u, v}, rank)) out.push_back({u, v});
  return out;
}

int diagonal(Face f, int rank) {
  if (!in_diamond(f, rank))
    throw ConfigError("face (" + std::to_string(f.u) + "," + std::to_string(f.v) +
                      ") is outside the rank-" + std::to_string(rank) + " diamond");
  return f.v - f.u + rank;
}

std::vector<Face> faces_on_diagonal(int d, int rank) {
  if (d < 0 || d > 2 * rank) throw ConfigError("diagonal index out of range");
  std::vector<Face> out;
  for (int u = -rank; u < rank; ++u) {
    Face f{u, u + d - rank};
    if (in_diamond(f, rank)) out.push_back(f);
  }
  return out;
}

}  // namespace aztec
