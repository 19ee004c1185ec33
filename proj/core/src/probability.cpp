#include "anchorrec/probability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "anchorrec/errors.hpp"

namespace anchorrec {

__extension__ typedef unsigned __int128 u128;

namespace {
// Longest product evaluated term by term.
constexpr std::uint64_t kDirectProductLimit = 1u << 20;
}  // namespace

int three_log2_ceil(std::uint64_t n) {
  if (n < 1) throw DomainError("three_log2_ceil: n must be >= 1");
  if (n > (std::uint64_t{1} << 40)) throw DomainError("three_log2_ceil: n too large");
  const u128 cube = static_cast<u128>(n) * n * n;
  int m = 0;
  while ((static_cast<u128>(1) << m) < cube) ++m;
  return m;
}

double bound_second_copy(double n, double m) {
  if (!(n >= 1.0) || !(m >= 1.0)) throw DomainError("bound_second_copy: need n >= 1 and m >= 1");
  const double ratio = std::exp2(std::log2(n) - m / 2.0);
  return std::expm1(m * std::log1p(ratio));
}

double shadow_uniqueness_prob(std::uint64_t n, int m) {
  if (m < 0 || static_cast<std::uint64_t>(m) > n) throw DomainError("shadow_uniqueness_prob: need 0 <= m <= n");
  const std::uint64_t outside = n - static_cast<std::uint64_t>(m);
  const long double shadows = std::ldexp(1.0L, m);
  if (shadows < static_cast<long double>(outside))
    throw DomainError("shadow_uniqueness_prob: " + std::to_string(outside) + " vertices cannot have distinct shadows on " +
                      std::to_string(m) + " anchor vertices");
  long double log_p = 0.0L;
  if (outside <= kDirectProductLimit) {
    for (std::uint64_t j = 1; j < outside; ++j) log_p += std::log1p(-static_cast<long double>(j) / shadows);
    return static_cast<double>(std::exp(log_p));
  }
  // Euler-Maclaurin for sum_{j<k} log(1 - j/N) with f(0) = 0.
  const long double k = static_cast<long double>(outside);
  const long double t = k / shadows;
  long double integral;  // N * int_0^t log(1 - u) du
  if (t < 1e-3L) {
    long double series = 0.0L, power = t;
    for (int r = 2; r <= 12; ++r) {
      power *= t;
      series += power / (static_cast<long double>(r) * (r - 1));
    }
    integral = -shadows * series;
  } else {
    integral = shadows * (-t - (1.0L - t) * std::log1p(-t));
  }
  const long double rest = shadows - k;
  const long double f_k = std::log1p(-t);
  const long double d1 = (rest > 0 ? -1.0L / rest : -std::numeric_limits<long double>::infinity()) + 1.0L / shadows;
  const long double d3 = rest > 0 ? -2.0L / (rest * rest * rest) + 2.0L / (shadows * shadows * shadows) : 0.0L;
  log_p = integral - f_k / 2.0L + d1 / 12.0L - d3 / 720.0L;
  return static_cast<double>(std::exp(log_p));
}

double log10_hit_bound_lgamma(std::uint64_t n, std::uint64_t m) {
  const auto nn = static_cast<long double>(n);
  const auto mm = static_cast<long double>(m);
  const long double falling = (std::lgamma(nn + 1) - std::lgamma(nn - mm + 1)) / std::log(10.0L);
  return static_cast<double>(falling - mm * (mm - 1) / 2 * std::log10(2.0L));
}

double log10_hit_bound_sum(std::uint64_t n, std::uint64_t m) {
  // Term by term: prod_{i<m} (n - i) / 2^i.
  long double total = 0.0L;
  const long double log10_2 = std::log10(2.0L);
  for (std::uint64_t i = 0; i < m; ++i)
    total += std::log10(static_cast<long double>(n - i)) - static_cast<long double>(i) * log10_2;
  return static_cast<double>(total);
}

HitBound subgraph_hit_prob(std::uint64_t n, std::uint64_t m) {
  if (m > n) throw DomainError("subgraph_hit_prob: need m <= n");
  HitBound out{};
  out.log10_bound = log10_hit_bound_lgamma(n, m);
  out.vacuous = out.log10_bound >= 0.0;
  out.probability = out.vacuous ? 1.0 : std::pow(10.0, out.log10_bound);
  return out;
}

Proportion wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  Proportion p;
  p.successes = successes;
  p.trials = trials;
  if (trials == 0) return p;
  const double t = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / t;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / t;
  const double centre = (phat + z2 / (2 * t)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / t + z2 / (4 * t * t)) / denom;
  p.estimate = phat;
  p.lower = std::max(0.0, centre - half);
  p.upper = std::min(1.0, centre + half);
  return p;
}

bool intervals_overlap(const Proportion& a, const Proportion& b) noexcept {
  return a.lower <= b.upper && b.lower <= a.upper;
}

}  // namespace anchorrec
