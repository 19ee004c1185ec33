#include "anchorrec/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "anchorrec/errors.hpp"

namespace anchorrec {

__extension__ typedef unsigned __int128 u128;

namespace {

// Multiplicative formula; every partial product C(n-k+i, i) is an integer.
bool binomial_impl(std::uint64_t n, std::uint64_t k, std::uint64_t& out) {
  if (k > n) {
    out = 0;
    return true;
  }
  k = std::min(k, n - k);
  u128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return false;
  }
  out = static_cast<std::uint64_t>(acc);
  return true;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t out = 0;
  if (!binomial_impl(n, k, out))
    throw CapacityError("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows 64 bits");
  return out;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept {
  std::uint64_t out = 0;
  if (!binomial_impl(n, k, out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw CapacityError("count overflows 64 bits");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw CapacityError("count overflows 64 bits");
  return out;
}

}  // namespace anchorrec
