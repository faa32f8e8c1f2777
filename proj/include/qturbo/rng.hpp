#pragma once

#include <cstdint>
#include <random>

namespace qturbo {

/// Deterministic random source: std::mt19937_64 (fully specified by the C++
/// standard) with explicit conversions, so draws are identical across platforms
/// and standard libraries. Streams are derived with SplitMix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for worker/trial `index` of a run seeded with `master`.
  static Rng derive(std::uint64_t master, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, bound); bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace qturbo
