#include "anchorrec/bundle.hpp"

#include <array>
#include <map>
#include <ostream>
#include <set>

#include "anchorrec/combinatorics.hpp"
#include "anchorrec/embedding.hpp"
#include "anchorrec/graph6.hpp"
#include "detail/multiset_text.hpp"

namespace anchorrec {

std::uint64_t AdjacentBundle::total_pairs() const {
  std::uint64_t sum = 0;
  for (const auto& [key, c] : pair_graphs) sum = checked_add(sum, c);
  return sum;
}

AdjacentBundle build_bundle(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw PreconditionError("build_bundle: vertex set universe differs from graph order");
  if (s.empty()) throw PreconditionError("build_bundle: anchor must be non-empty");
  if (g.order() - s.size() < 2) throw PreconditionError("build_bundle: need at least two vertices outside the anchor");

  AdjacentBundle bundle;
  bundle.host_order = g.order();
  bundle.anchor = canonical_key(induced_subgraph(g, s)).graph();

  const auto outside = s.complement().members();
  for (std::size_t a = 0; a < outside.size(); ++a) {
    for (std::size_t b = a + 1; b < outside.size(); ++b) {
      VertexSet with_pair = s;
      with_pair.insert(outside[a]);
      with_pair.insert(outside[b]);
      ++bundle.pair_graphs[canonical_key(induced_subgraph(g, with_pair))];
    }
  }
  return bundle;
}

namespace {

using Kind = ReconstructionError::Kind;

struct PairRecord {
  VertexSet first;   // smaller shadow
  VertexSet second;  // larger shadow
  bool adjacent;
};

// Pulls the two vertices of `f` outside the unique copy of H back onto H.
PairRecord extract(const Graph& anchor, const std::vector<Permutation>& anchor_gens, const CanonicalKey& key) {
  const Graph f = key.graph();
  std::vector<Embedding> copies;
  for_each_induced_copy(anchor, f, [&](std::span<const Vertex> e) {
    copies.emplace_back(e.begin(), e.end());
    return copies.size() < 2;
  });
  if (copies.empty())
    throw ReconstructionError(Kind::kCorruptBundle, "pair-graph " + key.graph6() + " contains no copy of the anchor");
  if (copies.size() > 1)
    throw ReconstructionError(Kind::kAmbiguousAnchor,
                              "pair-graph " + key.graph6() + " contains the anchor on two different vertex sets");

  const Embedding& phi = copies.front();
  VertexSet image(f.order(), phi);
  const auto extra = image.complement().members();

  std::array<VertexSet, 2> shadows{VertexSet(anchor.order()), VertexSet(anchor.order())};
  for (std::size_t i = 0; i < 2; ++i) {
    for (Vertex u = 0; u < anchor.order(); ++u)
      if (f.has_edge(phi[u], extra[i])) shadows[i].insert(u);
    // Embeddings onto the same image differ by Aut(H); the pulled-back shadow
    // is embedding independent exactly when every generator fixes it.
    for (const auto& gen : anchor_gens) {
      if (gen.apply(shadows[i]) != shadows[i])
        throw ReconstructionError(Kind::kShadowNotInvariant, "pair-graph " + key.graph6() + " yields shadow " +
                                                                 shadows[i].to_string() +
                                                                 " that is not invariant under Aut(H)");
    }
  }
  if (shadows[0] == shadows[1])
    throw ReconstructionError(Kind::kInconsistentShadows, "pair-graph " + key.graph6() +
                                                              " has two vertices with the same shadow " +
                                                              shadows[0].to_string());
  if (shadows[1] < shadows[0]) std::swap(shadows[0], shadows[1]);
  return {shadows[0], shadows[1], f.has_edge(extra[0], extra[1])};
}

}  // namespace

Graph reconstruct(const AdjacentBundle& bundle) {
  const int m = bundle.anchor_order();
  const int n = bundle.host_order;
  if (m < 1) throw PreconditionError("reconstruct: anchor must be non-empty");
  if (n - m < 2) throw PreconditionError("reconstruct: need at least two vertices outside the anchor");

  const auto outside = static_cast<std::uint64_t>(n - m);
  const auto expected_pairs = binomial(outside, 2);
  if (bundle.total_pairs() != expected_pairs)
    throw ReconstructionError(Kind::kCorruptBundle, "bundle holds " + std::to_string(bundle.total_pairs()) +
                                                        " pair-graphs, expected C(n-m, 2) = " +
                                                        std::to_string(expected_pairs));

  const auto form = canonical_form(bundle.anchor);
  const Graph anchor = form.key.graph();
  const auto gens = automorphism_generators(anchor);

  std::map<std::pair<VertexSet, VertexSet>, bool> edges_between;
  for (const auto& [key, mult] : bundle.pair_graphs) {
    if (key.order() != m + 2)
      throw ReconstructionError(Kind::kCorruptBundle, "pair-graph " + key.graph6() + " has order " +
                                                          std::to_string(key.order()) + ", expected " +
                                                          std::to_string(m + 2));
    auto rec = extract(anchor, gens, key);
    // Identical keys give identical shadow pairs, so a repeated key means a
    // shadow pair would be recorded twice.
    if (mult > 1)
      throw ReconstructionError(Kind::kInconsistentShadows,
                                "pair-graph " + key.graph6() + " occurs " + std::to_string(mult) +
                                    " times but every shadow pair must be distinct");
    auto [it, inserted] = edges_between.emplace(std::pair{rec.first, rec.second}, rec.adjacent);
    if (!inserted)
      throw ReconstructionError(Kind::kInconsistentShadows, "shadow pair " + rec.first.to_string() + ", " +
                                                                rec.second.to_string() + " recorded twice");
  }

  std::map<VertexSet, std::uint64_t> appearances;
  for (const auto& [pair, bit] : edges_between) {
    ++appearances[pair.first];
    ++appearances[pair.second];
  }
  if (appearances.size() != outside)
    throw ReconstructionError(Kind::kInconsistentShadows, "found " + std::to_string(appearances.size()) +
                                                              " distinct shadows, expected n-m = " +
                                                              std::to_string(outside));
  for (const auto& [s, count] : appearances) {
    if (count != outside - 1)
      throw ReconstructionError(Kind::kInconsistentShadows, "shadow " + s.to_string() + " appears in " +
                                                                std::to_string(count) + " pairs, expected " +
                                                                std::to_string(outside - 1));
  }

  // Vertices 0..m-1 are the anchor, m.. are the outside vertices in shadow order.
  std::map<VertexSet, Vertex> index;
  for (const auto& [s, count] : appearances) index.emplace(s, m + static_cast<Vertex>(index.size()));

  GraphBuilder b(n);
  for (auto [u, v] : anchor.edges()) b.add_edge(u, v);
  for (const auto& [s, v] : index)
    for (Vertex u : s.members()) b.add_edge(u, v);
  for (const auto& [pair, adjacent] : edges_between)
    if (adjacent) b.add_edge(index.at(pair.first), index.at(pair.second));
  return std::move(b).build();
}

void write_bundle(std::ostream& out, const AdjacentBundle& bundle) {
  out << "bundle m=" << bundle.anchor_order() << " n=" << bundle.host_order
      << " anchor=" << graph6_encode(bundle.anchor) << '\n';
  for (const auto& [key, c] : bundle.pair_graphs) out << key.graph6() << ' ' << c << '\n';
}

AdjacentBundle read_bundle(std::istream& in) {
  const auto all = detail::slurp(in);
  const auto lines = detail::split_lines(all);
  if (lines.empty()) throw ParseError("bundle: empty input", 0);
  const auto header = detail::parse_header(lines[0], "bundle");
  AdjacentBundle bundle;
  const auto& [m, m_at] = header.at("m", lines[0].offset);
  const auto& [n, n_at] = header.at("n", lines[0].offset);
  const auto& [anchor, anchor_at] = header.at("anchor", lines[0].offset);
  bundle.host_order = static_cast<int>(detail::parse_uint(n, n_at, "n"));
  try {
    bundle.anchor = canonical_key(graph6_decode(anchor)).graph();
  } catch (const ParseError& e) {
    throw ParseError("bundle: bad anchor graph6", anchor_at + e.offset());
  }
  if (static_cast<std::uint64_t>(bundle.anchor.order()) != detail::parse_uint(m, m_at, "m"))
    throw ParseError("bundle: anchor order differs from header m", m_at);
  detail::read_entries(lines, 1, bundle.pair_graphs);
  return bundle;
}

}  // namespace anchorrec
