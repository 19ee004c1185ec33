#include "anchorrec/anchor.hpp"

#include <algorithm>
#include <unordered_map>

#include "anchorrec/canonical.hpp"
#include "anchorrec/embedding.hpp"
#include "anchorrec/errors.hpp"
#include "anchorrec/rng.hpp"

namespace anchorrec {

namespace {

void check_proper(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw PreconditionError("anchor: vertex set universe differs from graph order");
  if (s.empty() || s.size() >= g.order())
    throw PreconditionError("anchor: a proper, non-empty induced subgraph is required");
}

// Shadow expressed in anchor positions 0..|S|-1.
VertexSet local_shadow(const VertexSet& shadow, const std::vector<Vertex>& members) {
  VertexSet local(static_cast<int>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i)
    if (shadow.contains(members[i])) local.insert(static_cast<Vertex>(i));
  return local;
}

}  // namespace

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::kStable: return "stable";
    case Stability::kNotAnchor: return "not-anchor";
    case Stability::kShadowNotInvariant: return "shadow-not-invariant";
    case Stability::kDuplicateShadow: return "duplicate-shadow";
  }
  return "unknown";
}

VertexSet shadow(const Graph& g, const VertexSet& s, Vertex v) {
  if (s.universe() != g.order()) throw PreconditionError("shadow: vertex set universe differs from graph order");
  if (v < 0 || v >= g.order()) throw PreconditionError("shadow: vertex out of range");
  if (s.contains(v)) throw PreconditionError("shadow: vertex " + std::to_string(v) + " lies inside the anchor");
  return neighbors(g, v) & s;
}

AnchorEvidence is_anchor(const Graph& g, const VertexSet& s) {
  check_proper(g, s);
  const auto members = s.members();
  const Graph h = induced_subgraph(g, members);
  AnchorEvidence ev;
  // One visit per distinct vertex set; S itself is always among them.
  for_each_induced_copy(h, g, [&](std::span<const Vertex> image) {
    VertexSet copy(g.order(), image);
    ++ev.copies;
    if (copy != s) ev.second_copy = std::move(copy);
    return !ev.second_copy.has_value();
  });
  ev.copies = ev.second_copy ? 2 : 1;
  ev.is_anchor = !ev.second_copy;
  return ev;
}

AnchorCertificate is_stable_anchor(const Graph& g, const VertexSet& s) {
  auto evidence = is_anchor(g, s);
  AnchorCertificate cert;
  cert.host = g;
  cert.anchor = s;
  cert.copies = evidence.copies;
  cert.second_copy = evidence.second_copy;

  const auto members = s.members();
  const Graph h = induced_subgraph(g, members);
  cert.anchor_automorphisms = automorphism_generators(h);
  cert.asymmetric = cert.anchor_automorphisms.empty();

  for (Vertex v = 0; v < g.order(); ++v)
    if (!s.contains(v)) cert.shadows.push_back({v, shadow(g, s, v)});

  if (!evidence.is_anchor) {
    cert.verdict = Stability::kNotAnchor;
    cert.failure_reason = "induced subgraph occurs again on " +
                          (evidence.second_copy ? evidence.second_copy->to_string() : std::string("?"));
    return cert;
  }

  if (!cert.asymmetric) {
    for (const auto& entry : cert.shadows) {
      const auto local = local_shadow(entry.shadow, members);
      for (std::size_t gi = 0; gi < cert.anchor_automorphisms.size(); ++gi) {
        if (cert.anchor_automorphisms[gi].apply(local) != local) {
          cert.verdict = Stability::kShadowNotInvariant;
          cert.witnesses = {entry.vertex};
          cert.witness_generator = gi;
          cert.failure_reason = "shadow " + entry.shadow.to_string() + " of vertex " +
                                std::to_string(entry.vertex) + " is moved by automorphism " +
                                cert.anchor_automorphisms[gi].to_string();
          return cert;
        }
      }
    }
  }

  std::unordered_map<VertexSet, Vertex, VertexSetHash> first_owner;
  for (const auto& entry : cert.shadows) {
    auto [it, inserted] = first_owner.emplace(entry.shadow, entry.vertex);
    if (!inserted) {
      cert.verdict = Stability::kDuplicateShadow;
      cert.witnesses = {it->second, entry.vertex};
      cert.failure_reason = "vertices " + std::to_string(it->second) + " and " + std::to_string(entry.vertex) +
                            " share shadow " + entry.shadow.to_string();
      return cert;
    }
  }

  cert.verdict = Stability::kStable;
  return cert;
}

AnchorSearchResult find_stable_anchor(const Graph& g, int m, std::uint64_t max_trials, std::uint64_t seed) {
  if (m < 1 || m >= g.order()) throw PreconditionError("find_stable_anchor: need 1 <= m < |V(G)|");
  AnchorSearchResult result;
  for (std::uint64_t t = 0; t < max_trials; ++t) {
    Rng rng(derive_seed(seed, t));
    auto cert = is_stable_anchor(g, rng.subset(g.order(), m));
    ++result.trials_run;
    if (cert.stable()) {
      result.certificate = std::move(cert);
      result.trial = t;
      return result;
    }
    ++result.failures[cert.verdict];
  }
  return result;
}

}  // namespace anchorrec
