#pragma once

#include <cstdint>

namespace covsep {

/// SplitMix64 pseudo-random generator (Steele, Lea & Flood). The complete
/// update rule, so that any seeded run can be reproduced in any language:
///
///   state += 0x9E3779B97F4A7C15
///   z  = state
///   z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
///   z ^= z >> 27;  z *= 0x94D049BB133111EB
///   output = z ^ (z >> 31)
///
/// next_unit() maps the top 53 output bits onto the dyadic grid in [0, 1).
/// All randomness in this library flows through this generator, so every
/// seeded computation is byte-for-byte reproducible across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double next_unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [-1, 1).
  double next_symmetric() noexcept { return 2.0 * next_unit() - 1.0; }

 private:
  std::uint64_t state_;
};

}  // namespace covsep
