#include "anchorrec/experiments.hpp"

#include <chrono>
#include <set>
#include <unordered_set>

#include "anchorrec/canonical.hpp"
#include "anchorrec/combinatorics.hpp"
#include "anchorrec/deck.hpp"
#include "anchorrec/errors.hpp"
#include "anchorrec/rng.hpp"
#include "detail/parallel.hpp"

namespace anchorrec {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Stream 0 of a trial seed builds the graph; stream 1 drives subset sampling.
constexpr std::uint64_t kSubsetStream = 1;

}  // namespace

int ExperimentConfig::m_for(int n) const {
  switch (m_rule) {
    case MRule::kExplicit: return m_explicit;
    case MRule::kThreeLog2: return three_log2_ceil(static_cast<std::uint64_t>(n));
    case MRule::kThreeLog2MinusTwo: return three_log2_ceil(static_cast<std::uint64_t>(n)) - 2;
  }
  return m_explicit;
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw PreconditionError("experiment: trial count must be >= 1");
  if (n_values.empty()) throw PreconditionError("experiment: n range is empty");
  for (int n : n_values) {
    if (n < 1) throw PreconditionError("experiment: n must be positive");
    const int m = m_for(n);
    if (m < 1 || m >= n)
      throw PreconditionError("experiment: m = " + std::to_string(m) + " is not in [1, n) for n = " + std::to_string(n));
  }
}

std::string to_string(MRule rule) {
  switch (rule) {
    case MRule::kExplicit: return "explicit";
    case MRule::kThreeLog2: return "ceil(3log2n)";
    case MRule::kThreeLog2MinusTwo: return "ceil(3log2n)-2";
  }
  return "unknown";
}

std::string to_string(ReconstructionError::Kind kind) {
  switch (kind) {
    case ReconstructionError::Kind::kCorruptBundle: return "corrupt-bundle";
    case ReconstructionError::Kind::kAmbiguousAnchor: return "ambiguous-anchor";
    case ReconstructionError::Kind::kShadowNotInvariant: return "shadow-not-invariant";
    case ReconstructionError::Kind::kInconsistentShadows: return "inconsistent-shadows";
  }
  return "unknown";
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) noexcept { return derive_seed(master, trial); }

StableAnchorEstimate estimate_stable_anchor_prob(int n, int m, std::uint64_t trials, std::uint64_t seed,
                                                 bool record_timing) {
  if (m < 1 || m >= n) throw PreconditionError("estimate_stable_anchor_prob: need 1 <= m < n");
  if (trials < 1) throw PreconditionError("estimate_stable_anchor_prob: trials must be >= 1");

  std::vector<TrialRecord> records(trials);
  std::vector<Stability> verdicts(trials);
  detail::parallel_for(trials, [&](std::uint64_t t) {
    const auto start = Clock::now();
    const auto s = trial_seed(seed, t);
    const Graph g = random_graph(n, s);
    Rng rng(derive_seed(s, kSubsetStream));
    const auto cert = is_stable_anchor(g, rng.subset(n, m));
    auto& r = records[t];
    r.experiment = "anchor-scan";
    r.n = n;
    r.m = m;
    r.trial = t;
    r.seed = s;
    r.asymmetric = cert.asymmetric;
    r.anchor = cert.copies == 1;
    r.stable = cert.stable();
    if (record_timing) r.ms = elapsed_ms(start);
    verdicts[t] = cert.verdict;
  });

  StableAnchorEstimate est;
  est.n = n;
  est.m = m;
  std::uint64_t asym = 0, anchors = 0, stable = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    asym += *records[t].asymmetric;
    anchors += *records[t].anchor;
    stable += *records[t].stable;
    if (verdicts[t] != Stability::kStable) ++est.failures[verdicts[t]];
  }
  est.asymmetric = wilson_interval(asym, trials);
  est.anchor = wilson_interval(anchors, trials);
  est.stable = wilson_interval(stable, trials);
  est.records = std::move(records);
  return est;
}

Proportion estimate_asymmetry(int n, std::uint64_t trials, std::uint64_t seed) {
  std::vector<char> asym(trials);
  detail::parallel_for(trials, [&](std::uint64_t t) { asym[t] = is_asymmetric(random_graph(n, trial_seed(seed, t))); });
  std::uint64_t count = 0;
  for (char a : asym) count += a != 0;
  return wilson_interval(count, trials);
}

Proportion estimate_shadow_distinctness(int n, int m, std::uint64_t trials, std::uint64_t seed) {
  if (m < 1 || m > 62 || m >= n) throw PreconditionError("estimate_shadow_distinctness: need 1 <= m < n, m <= 62");
  std::uint64_t distinct = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, t));
    std::unordered_set<std::uint64_t> seen;
    bool ok = true;
    for (int v = 0; v < n - m && ok; ++v) ok = seen.insert(rng.below(std::uint64_t{1} << m)).second;
    distinct += ok;
  }
  return wilson_interval(distinct, trials);
}

RoundtripReport roundtrip_experiment(int n, std::uint64_t trials, std::uint64_t seed, const RoundtripOptions& options) {
  const int m = options.m.value_or(n >= 1 ? three_log2_ceil(static_cast<std::uint64_t>(n)) - 2 : 0);
  if (m < 1 || m >= n - 2) throw PreconditionError("roundtrip_experiment: need 1 <= m < n - 2");
  if (trials < 1) throw PreconditionError("roundtrip_experiment: trials must be >= 1");

  struct Outcome {
    bool mismatch = false;
    std::optional<std::string> error;
  };
  std::vector<TrialRecord> records(trials);
  std::vector<Outcome> outcomes(trials);

  detail::parallel_for(trials, [&](std::uint64_t t) {
    const auto start = Clock::now();
    const auto s = trial_seed(seed, t);
    const Graph g = random_graph(n, s);
    auto& r = records[t];
    r.experiment = "recon-roundtrip";
    r.n = n;
    r.m = m;
    r.trial = t;
    r.seed = s;
    const auto search = find_stable_anchor(g, m, options.max_probes, derive_seed(s, kSubsetStream));
    r.anchor = search.found();
    r.stable = search.found();
    if (search.found()) {
      const auto& cert = *search.certificate;
      r.asymmetric = cert.asymmetric;
      auto bundle = build_bundle(g, cert.anchor);
      if (options.drop_pair_graph) {
        auto it = bundle.pair_graphs.begin();
        if (--it->second == 0) bundle.pair_graphs.erase(it);
      }
      try {
        r.reconstructed = are_isomorphic(reconstruct(bundle), g);
        outcomes[t].mismatch = !*r.reconstructed;
      } catch (const ReconstructionError& e) {
        r.reconstructed = false;
        outcomes[t].error = to_string(e.kind());
        // An intact bundle from a stable anchor must always reconstruct.
        outcomes[t].mismatch = !options.drop_pair_graph;
      }
    }
    if (options.record_timing) r.ms = elapsed_ms(start);
  });

  RoundtripReport report;
  report.n = n;
  report.m = m;
  report.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    report.anchors_found += records[t].anchor.value_or(false);
    report.reconstructed += records[t].reconstructed.value_or(false);
    report.mismatches += outcomes[t].mismatch;
    if (outcomes[t].error) ++report.errors[*outcomes[t].error];
  }
  report.records = std::move(records);
  return report;
}

DeckCollisionReport deck_collisions(int n, int m) {
  if (m < 0 || m > n) throw PreconditionError("deck_collisions: need 0 <= m <= n");
  const auto classes = enumerate_classes(n);
  std::map<std::map<CanonicalKey, std::uint64_t>, std::uint64_t> groups;
  for (const auto& key : classes) ++groups[full_deck(key.graph(), m).counts];

  DeckCollisionReport report;
  report.n = n;
  report.m = m;
  report.classes = classes.size();
  report.pairs = binomial(classes.size(), 2);
  for (const auto& [deck, size] : groups) {
    if (size < 2) continue;
    report.collision_groups.push_back(size);
    report.colliding_pairs += binomial(size, 2);
  }
  return report;
}

}  // namespace anchorrec
