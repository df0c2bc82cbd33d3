#include "aztec/rng.hpp"

#include <cstdlib>
#include <random>
#include <string>

#include "aztec/errors.hpp"

namespace aztec {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t RngStream::bits(std::uint64_t step, std::uint32_t color, std::uint32_t level,
                              std::uint32_t index) const {
  std::uint64_t h = mix64(seed_ ^ 0x6a09e667f3bcc908ULL);
  h = mix64(h ^ step);
  h = mix64(h ^ ((static_cast<std::uint64_t>(color) << 32) | level));
  return mix64(h ^ index);
}

double RngStream::uniform(std::uint64_t step, std::uint32_t color, std::uint32_t level,
                          std::uint32_t index) const {
  return static_cast<double>(bits(step, color, level, index) >> 11) * 0x1.0p-53;
}

RngStream RngStream::derive(std::uint64_t index) const {
  return RngStream(mix64(mix64(seed_ ^ 0xbb67ae8584caa73bULL) ^ index));
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, bool entropy) {
  if (entropy) {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  if (flag) return *flag;
  if (const char* env = std::getenv("AZTEC_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      std::uint64_t s = std::stoull(env, &used);
      if (used == std::string(env).size()) return s;
    } catch (const std::exception&) {
    }
    throw ConfigError("AZTEC_SEED must be an unsigned integer");
  }
  return 0;
}

}  // namespace aztec
