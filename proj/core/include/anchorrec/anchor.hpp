#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anchorrec/graph.hpp"
#include "anchorrec/permutation.hpp"
#include "anchorrec/vertex_set.hpp"

namespace anchorrec {

/// s_{v,S}: neighbours of the outside vertex v that lie in S.
VertexSet shadow(const Graph& g, const VertexSet& s, Vertex v);

struct AnchorEvidence {
  bool is_anchor = false;
  /// Number of induced copies of G[S] found, capped at 2.
  int copies = 0;
  /// A different vertex set inducing a copy of G[S], when one exists.
  std::optional<VertexSet> second_copy;
};

/// True iff G[S] occurs exactly once in G. Stops at the first second copy.
/// Requires 1 <= |S| < |V(G)|.
AnchorEvidence is_anchor(const Graph& g, const VertexSet& s);

enum class Stability {
  kStable,
  kNotAnchor,           // G[S] occurs more than once
  kShadowNotInvariant,  // some shadow is moved by an automorphism of G[S]
  kDuplicateShadow,     // two outside vertices share a shadow
};

std::string_view to_string(Stability s);

struct ShadowEntry {
  Vertex vertex;     // outside vertex, host label
  VertexSet shadow;  // subset of S, host labels
};

/// Evidence that a vertex set does (or does not) induce a stable anchor.
struct AnchorCertificate {
  Graph host;
  VertexSet anchor;
  int copies = 0;  // capped at 2
  std::optional<VertexSet> second_copy;
  bool asymmetric = false;
  /// Generators of Aut(G[S]) acting on anchor positions 0..|S|-1 (ascending host order).
  std::vector<Permutation> anchor_automorphisms;
  /// One entry per outside vertex, ascending.
  std::vector<ShadowEntry> shadows;

  Stability verdict = Stability::kNotAnchor;
  /// Outside vertices witnessing the failure (one for kShadowNotInvariant, two for kDuplicateShadow).
  std::vector<Vertex> witnesses;
  /// Index into anchor_automorphisms of the generator moving the witness shadow.
  std::optional<std::size_t> witness_generator;
  std::string failure_reason;

  bool stable() const noexcept { return verdict == Stability::kStable; }
  /// Stable with a nontrivial automorphism group whose action fixes every shadow.
  bool stable_with_symmetry() const noexcept { return stable() && !asymmetric; }
  /// 2-adjacent reconstruction needs at least two outside vertices.
  bool reconstructible() const noexcept {
    return stable() && host.order() - anchor.size() >= 2;
  }
};

/// Checks, in order: anchor property, invariance of each shadow under every
/// generator of Aut(G[S]) (skipped when G[S] is asymmetric), distinct shadows.
AnchorCertificate is_stable_anchor(const Graph& g, const VertexSet& s);

struct AnchorSearchResult {
  std::optional<AnchorCertificate> certificate;
  /// Trial index of the returned certificate.
  std::optional<std::uint64_t> trial;
  std::uint64_t trials_run = 0;
  /// How often each failure reason occurred among unsuccessful trials.
  std::map<Stability, std::uint64_t> failures;

  bool found() const noexcept { return certificate.has_value(); }
};

/// Probes uniformly random m-subsets; trial t uses seed derive_seed(seed, t).
/// Returns the lowest-index stable certificate. Requires 1 <= m < |V(G)|.
AnchorSearchResult find_stable_anchor(const Graph& g, int m, std::uint64_t max_trials, std::uint64_t seed);

}  // namespace anchorrec
