#pragma once

#include <cstdint>

namespace anchorrec {

/// Smallest integer m with 2^m >= n^3, i.e. ceil(3 log2 n). Exact; n >= 1.
int three_log2_ceil(std::uint64_t n);

/// Upper bound (1 + n 2^{-m/2})^m - 1 on the chance that an m-vertex induced
/// subgraph of G(n, 1/2) occurs a second time. Evaluated in log space.
/// Throws DomainError unless n >= 1 and m >= 1.
double bound_second_copy(double n, double m);

/// Probability that n - m independent uniform subsets of an m-set are
/// pairwise distinct: prod_{j < n-m} (1 - j / 2^m). Throws DomainError when
/// 2^m < n - m (pigeonhole) or m > n.
double shadow_uniqueness_prob(std::uint64_t n, int m);

/// Union bound on P{C_G(H) >= 1} for a fixed m-vertex H in G(n, 1/2):
/// C(n, m) / |Gamma_m| with |Gamma_m| ~ 2^{m(m-1)/2} / m!.
struct HitBound {
  double log10_bound;  // log10 of the bound, unclamped
  double probability;  // min(1, bound)
  bool vacuous;        // bound >= 1
};

/// Throws DomainError for m > n.
HitBound subgraph_hit_prob(std::uint64_t n, std::uint64_t m);

// Two independent evaluations of log10 of the hit bound, used to cross-check.
double log10_hit_bound_lgamma(std::uint64_t n, std::uint64_t m);
double log10_hit_bound_sum(std::uint64_t n, std::uint64_t m);

/// A Monte Carlo proportion with its Wilson score interval.
struct Proportion {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 1.0;
};

inline constexpr double kZ95 = 1.959963984540054;

Proportion wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);
bool intervals_overlap(const Proportion& a, const Proportion& b) noexcept;

}  // namespace anchorrec
