#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "anchorrec/vertex_set.hpp"

namespace anchorrec {

/// SplitMix64 finalizer; the seed-mixing primitive for derived streams.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of an independent stream: hash of (seed, stream index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Reproducible generator. Wraps std::mt19937_64, whose output sequence is
/// fixed by the standard; bounded draws avoid the implementation-defined
/// standard distributions so results match across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// One fair bit; consumes 64-bit outputs one bit at a time.
  bool coin();
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform real in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform m-subset of 0..n-1 (partial Fisher-Yates).
  VertexSet subset(int n, int m);

 private:
  std::mt19937_64 engine_;
  std::uint64_t bits_ = 0;
  int bits_left_ = 0;
};

}  // namespace anchorrec
