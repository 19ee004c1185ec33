#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "anchorrec/errors.hpp"
#include "anchorrec/graph.hpp"

namespace anchorrec::detail {

// Fixed-width bitset used by the search kernels. Width is chosen at runtime
// from the graph order through with_width().
template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  static constexpr int capacity = static_cast<int>(W * 64);

  static Bits first_n(int n) {
    Bits b;
    for (std::size_t i = 0; i < W; ++i) {
      const int lo = static_cast<int>(i * 64);
      if (n >= lo + 64) {
        b.w[i] = ~std::uint64_t{0};
      } else if (n > lo) {
        b.w[i] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return b;
  }

  void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }

  // Lexicographic codes: position i lives at the most significant end so that
  // array comparison equals bit-string comparison.
  void set_msb(int i) { w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (63 - (i & 63)); }

  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool none() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i)
      for (auto x = w[i]; x != 0; x &= x - 1) f(static_cast<int>(i * 64) + std::countr_zero(x));
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] &= o.w[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  Bits operator&(const Bits& o) const { return Bits(*this) &= o; }
  Bits operator|(const Bits& o) const { return Bits(*this) |= o; }
  Bits operator~() const {
    Bits b;
    for (std::size_t i = 0; i < W; ++i) b.w[i] = ~w[i];
    return b;
  }

  friend bool operator==(const Bits&, const Bits&) = default;
  friend auto operator<=>(const Bits& a, const Bits& b) { return a.w <=> b.w; }
};

inline constexpr int kMaxKernelOrder = 256;

// Calls f(std::integral_constant<std::size_t, W>{}) with the narrowest width
// that holds n vertices.
template <class F>
decltype(auto) with_width(int n, F&& f) {
  if (n <= 64) return f(std::integral_constant<std::size_t, 1>{});
  if (n <= 128) return f(std::integral_constant<std::size_t, 2>{});
  if (n <= kMaxKernelOrder) return f(std::integral_constant<std::size_t, 4>{});
  throw CapacityError("graph order " + std::to_string(n) + " exceeds search kernel limit of " +
                      std::to_string(kMaxKernelOrder));
}

template <std::size_t W>
std::vector<Bits<W>> load_rows(const Graph& g) {
  std::vector<Bits<W>> rows(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    auto r = g.row(v);
    for (std::size_t i = 0; i < r.size() && i < W; ++i) rows[v].w[i] = r[i];
  }
  return rows;
}

// Union-find over vertex indices, used for orbit bookkeeping.
class Orbits {
 public:
  explicit Orbits(int n) : parent_(static_cast<std::size_t>(n)) { reset(); }

  void reset() {
    for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  void absorb(const std::vector<int>& perm) {
    for (std::size_t v = 0; v < perm.size(); ++v) unite(static_cast<int>(v), perm[v]);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace anchorrec::detail
