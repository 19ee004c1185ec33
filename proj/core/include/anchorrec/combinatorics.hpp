#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "anchorrec/vertex_set.hpp"

namespace anchorrec {

/// C(n, k) exactly; throws CapacityError on 64-bit overflow. C(n, k) = 0 for k > n.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// C(n, k), clamped to UINT64_MAX instead of throwing.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

/// Calls f(members) for every k-subset of 0..n-1 in lexicographic order;
/// members are ascending.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<Vertex> members(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) members[i] = i;
  for (;;) {
    f(std::span<const Vertex>(members));
    int i = k - 1;
    while (i >= 0 && members[i] == n - k + i) --i;
    if (i < 0) return;
    ++members[i];
    for (int j = i + 1; j < k; ++j) members[j] = members[j - 1] + 1;
  }
}

}  // namespace anchorrec
