#pragma once

#include <cstdint>
#include <random>

namespace blowup::util {

/// Seeded uniform sampler with a fixed bit-to-double mapping, so identical
/// seeds give identical streams on every platform (std::uniform_real_distribution
/// is implementation-defined and unsuitable for reproducible output files).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace blowup::util
