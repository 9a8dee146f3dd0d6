#pragma once

// Seeded, platform-stable random source.
//
// std::mt19937_64 is fully specified by the standard, but the std::*_distribution
// adaptors are not, so integer ranges and Bernoulli trials are derived from raw
// 64-bit draws here.

#include <cstdint>
#include <random>

namespace acq {

using Seed = std::uint64_t;

/// SplitMix64 finaliser, used to derive independent sub-seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Rejection on the top of the range keeps the result unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Integer threshold for an exact Bernoulli(p) trial against a raw 64-bit draw.
/// draw < threshold happens with probability p (to within 2^-64); p >= 1 is
/// handled by the caller since 2^64 does not fit.
inline std::uint64_t bernoulli_threshold(double p) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return UINT64_MAX;
  return static_cast<std::uint64_t>(p * 0x1.0p64);
}

}  // namespace acq
