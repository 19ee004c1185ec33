#include "anchorrec/rng.hpp"

#include <numeric>

#include "anchorrec/errors.hpp"

namespace anchorrec {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

bool Rng::coin() {
  if (bits_left_ == 0) {
    bits_ = engine_();
    bits_left_ = 64;
  }
  bool bit = bits_ & 1U;
  bits_ >>= 1;
  --bits_left_;
  return bit;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("Rng::below: bound must be positive");
  // Rejection on the largest multiple of bound keeps the draw exactly uniform.
  const std::uint64_t limit = -bound % bound;  // == 2^64 mod bound
  for (;;) {
    std::uint64_t x = engine_();
    if (x >= limit) return x % bound;
  }
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

VertexSet Rng::subset(int n, int m) {
  if (m < 0 || m > n) throw PreconditionError("Rng::subset: need 0 <= m <= n");
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < m; ++i) {
    auto j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  return VertexSet(n, std::span<const Vertex>(pool.data(), static_cast<std::size_t>(m)));
}

}  // namespace anchorrec
