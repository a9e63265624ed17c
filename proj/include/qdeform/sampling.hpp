#pragma once

#include <cstdint>
#include <random>

#include "qdeform/exact/bigrat.hpp"

namespace qdeform {

/// Deterministic rational sampler: std::mt19937_64 seeded with the user seed,
/// numerator uniform in [-9, 9], denominator uniform in [1, 9] (reduced).
/// Draws go through modulo reduction so the sequence is identical on every
/// standard library.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  exact::BigRat next() {
    const long num = static_cast<long>(rng_() % 19) - 9;
    const long den = static_cast<long>(rng_() % 9) + 1;
    return exact::rat(num, den);
  }
  /// Same, but never zero.
  exact::BigRat next_nonzero() {
    for (;;) {
      auto r = next();
      if (sgn(r) != 0) return r;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qdeform
