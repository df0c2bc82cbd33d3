#pragma once

#include <cstdint>
#include <optional>

namespace aztec {

// Counter-based stream: every draw is a pure function of the seed and the key,
// so results do not depend on the order in which draws happen.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t bits(std::uint64_t step, std::uint32_t color, std::uint32_t level,
                     std::uint32_t index) const;
  // Uniform on [0, 1) with 53 random bits.
  double uniform(std::uint64_t step, std::uint32_t color, std::uint32_t level,
                 std::uint32_t index) const;
  // Independent child stream, e.g. one per sample.
  RngStream derive(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
};

std::uint64_t mix64(std::uint64_t x);

// Explicit seed, else AZTEC_SEED, else 0; `entropy` draws from the OS instead.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, bool entropy);

}  // namespace aztec
