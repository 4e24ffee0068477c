#pragma once

#include <cstdint>
#include <random>

namespace stablab {

/// Seeded random stream with platform-independent draws.
///
/// std::mt19937_64's output sequence is fixed by the standard, but the
/// standard distributions are not, so the bounded and real draws here are
/// implemented directly on top of the raw engine.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller, one value per call).
  double normal();

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Independent stream for task (a, b) under a master seed; the mapping is
/// fixed so results do not depend on scheduling.
Rng derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

}  // namespace stablab
