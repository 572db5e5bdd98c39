#pragma once

#include <cstdint>

namespace elastica {

/// Seeded 64-bit linear congruential generator. Kept deliberately tiny so the
/// randomized verification runs can be reproduced in any language from the
/// recurrence documented in the README:
///   state <- 6364136223846793005 * state + 1442695040888963407  (mod 2^64)
/// with doubles drawn as (state >> 11) * 2^-53.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

 private:
  std::uint64_t state_;
};

}  // namespace elastica
