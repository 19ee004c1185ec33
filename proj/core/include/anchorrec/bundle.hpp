#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>

#include "anchorrec/canonical.hpp"
#include "anchorrec/errors.hpp"
#include "anchorrec/graph.hpp"
#include "anchorrec/vertex_set.hpp"

namespace anchorrec {

/// A_H = {H} together with N_2(H): the anchor and the multiset of its
/// 2-adjacent subgraphs H_vw, all stored without vertex labels.
struct AdjacentBundle {
  /// Canonical representative of H.
  Graph anchor;
  int host_order = 0;
  /// Canonical keys of the H_vw (order |H| + 2) with multiplicity.
  std::map<CanonicalKey, std::uint64_t> pair_graphs;

  int anchor_order() const noexcept { return anchor.order(); }
  std::uint64_t total_pairs() const;

  friend bool operator==(const AdjacentBundle&, const AdjacentBundle&) = default;
};

/// Requires 1 <= |S| and |V(G)| - |S| >= 2.
AdjacentBundle build_bundle(const Graph& g, const VertexSet& s);

class ReconstructionError : public Error {
 public:
  enum class Kind {
    kCorruptBundle,        // sizes wrong, or a pair-graph has no copy of H
    kAmbiguousAnchor,      // H occurs on two vertex sets of one pair-graph
    kShadowNotInvariant,   // shadow depends on which embedding of H is used
    kInconsistentShadows,  // repeated, missing or conflicting shadows
  };

  ReconstructionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Rebuilds G from A_H alone. Each pair-graph H_vw identifies its two extra
/// vertices by their shadows on H and contributes the edge bit between them;
/// the result is H plus one vertex per distinct shadow. When the bundle came
/// from a stable anchor the result is isomorphic to the original graph;
/// otherwise a ReconstructionError names what went wrong.
Graph reconstruct(const AdjacentBundle& bundle);

/// Text format: header "bundle m=<m> n=<n> anchor=<graph6>", then one
/// "<graph6> <multiplicity>" line per pair-graph class in key order.
void write_bundle(std::ostream& out, const AdjacentBundle& bundle);
AdjacentBundle read_bundle(std::istream& in);

}  // namespace anchorrec
