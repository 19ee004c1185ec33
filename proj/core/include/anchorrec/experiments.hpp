#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anchorrec/anchor.hpp"
#include "anchorrec/bundle.hpp"
#include "anchorrec/probability.hpp"

namespace anchorrec {

/// Default master seed for every experiment when none is given.
inline constexpr std::uint64_t kDefaultSeed = 20170101;

/// How the anchor order m is chosen for a host order n.
enum class MRule {
  kExplicit,
  kThreeLog2,          // ceil(3 log2 n)
  kThreeLog2MinusTwo,  // ceil(3 log2 n) - 2
};

enum class ReportFormat { kCsv, kJson };

struct ExperimentConfig {
  std::string name;
  std::vector<int> n_values;
  MRule m_rule = MRule::kThreeLog2;
  int m_explicit = 0;
  std::uint64_t trials = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string output_path;
  ReportFormat format = ReportFormat::kCsv;
  /// Wall-clock columns make reports non-reproducible, so they are opt-in.
  bool record_timing = false;

  int m_for(int n) const;
  /// Throws PreconditionError unless trials >= 1, n_values is non-empty and
  /// 1 <= m < n for every n.
  void validate() const;
};

std::string to_string(MRule rule);

struct TrialRecord {
  std::string experiment;
  int n = 0;
  int m = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::optional<bool> asymmetric;  // of the sampled anchor subgraph
  std::optional<bool> anchor;
  std::optional<bool> stable;
  std::optional<bool> reconstructed;
  std::optional<double> ms;
};

/// Seed of trial `trial` under `master`.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) noexcept;

struct StableAnchorEstimate {
  int n = 0;
  int m = 0;
  Proportion asymmetric;
  Proportion anchor;
  Proportion stable;
  std::map<Stability, std::uint64_t> failures;
  std::vector<TrialRecord> records;
};

/// Each trial draws G = random_graph(n, s_t) and a uniform m-subset S, then
/// certifies S. Deterministic for a given master seed at any thread count.
StableAnchorEstimate estimate_stable_anchor_prob(int n, int m, std::uint64_t trials, std::uint64_t seed,
                                                 bool record_timing = false);

/// Fraction of asymmetric graphs in G(n, 1/2).
Proportion estimate_asymmetry(int n, std::uint64_t trials, std::uint64_t seed);

/// Monte Carlo frequency of n - m uniform random shadows being pairwise distinct.
Proportion estimate_shadow_distinctness(int n, int m, std::uint64_t trials, std::uint64_t seed);

struct RoundtripOptions {
  /// Anchor order; defaults to ceil(3 log2 n) - 2.
  std::optional<int> m;
  /// Random subsets probed per graph when looking for a stable anchor.
  std::uint64_t max_probes = 64;
  /// Removes one pair-graph from every bundle to exercise the error path.
  bool drop_pair_graph = false;
  bool record_timing = false;
};

struct RoundtripReport {
  int n = 0;
  int m = 0;
  std::uint64_t trials = 0;
  std::uint64_t anchors_found = 0;
  std::uint64_t reconstructed = 0;
  /// Stable anchors whose reconstruction failed or was not isomorphic.
  std::uint64_t mismatches = 0;
  /// Reconstruction errors keyed by message, for the corrupted-bundle path.
  std::map<std::string, std::uint64_t> errors;
  std::vector<TrialRecord> records;

  /// Every found stable anchor reconstructed isomorphically.
  bool ok() const noexcept { return mismatches == 0; }
};

RoundtripReport roundtrip_experiment(int n, std::uint64_t trials, std::uint64_t seed,
                                     const RoundtripOptions& options = {});

std::string to_string(ReconstructionError::Kind kind);

/// Pairs of non-isomorphic n-vertex graphs (n <= 7) with identical m-decks.
struct DeckCollisionReport {
  int n = 0;
  int m = 0;
  std::uint64_t classes = 0;
  std::uint64_t pairs = 0;
  std::uint64_t colliding_pairs = 0;
  /// Sizes of the groups of classes sharing one deck, for groups of size >= 2.
  std::vector<std::uint64_t> collision_groups;
};

DeckCollisionReport deck_collisions(int n, int m);

}  // namespace anchorrec
