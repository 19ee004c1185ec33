#include "anchorrec/graph.hpp"

#include <bit>
#include <string>

#include "anchorrec/errors.hpp"
#include "anchorrec/rng.hpp"

namespace anchorrec {

Graph::Graph(int order) : order_(order) {
  if (order < 0) throw PreconditionError("Graph: negative order");
  words_ = (static_cast<std::size_t>(order) + 63) / 64;
  adj_.assign(words_ * static_cast<std::size_t>(order), 0);
}

Graph::Graph(int order, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(order) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  *this = std::move(b).build();
}

Graph::Graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(order, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order_)
    throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(order_));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >>
          (v % 64)) & 1U;
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (auto w : adj_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order_; ++u)
    for (Vertex v = u + 1; v < order_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  check_vertex(v);
  return {adj_.data() + static_cast<std::size_t>(v) * words_, words_};
}

GraphBuilder::GraphBuilder(int order) : graph_(order) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  graph_.check_vertex(u);
  graph_.check_vertex(v);
  if (u == v) throw PreconditionError("loops are not allowed");
  const auto w = graph_.words_;
  graph_.adj_[static_cast<std::size_t>(u) * w + v / 64] |= std::uint64_t{1} << (v % 64);
  graph_.adj_[static_cast<std::size_t>(v) * w + u / 64] |= std::uint64_t{1} << (u % 64);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  graph_.check_vertex(u);
  graph_.check_vertex(v);
  const auto w = graph_.words_;
  graph_.adj_[static_cast<std::size_t>(u) * w + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  graph_.adj_[static_cast<std::size_t>(v) * w + u / 64] &= ~(std::uint64_t{1} << (u % 64));
  return *this;
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle_graph: need n >= 3");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph star_graph(int leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

Graph relabel(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) throw PreconditionError("relabel: permutation size mismatch");
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(p(u), p(v));
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> members) {
  const int k = static_cast<int>(members.size());
  for (int i = 0; i < k; ++i) {
    if (members[i] < 0 || members[i] >= g.order())
      throw PreconditionError("induced_subgraph: vertex " + std::to_string(members[i]) +
                              " out of range");
    if (i > 0 && members[i] <= members[i - 1])
      throw PreconditionError("induced_subgraph: members must be strictly ascending");
  }
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(members[i], members[j])) b.add_edge(i, j);
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw PreconditionError("induced_subgraph: vertex set universe differs from graph order");
  auto members = s.members();
  return induced_subgraph(g, members);
}

VertexSet neighbors(const Graph& g, Vertex v) { return VertexSet::from_words(g.order(), g.row(v)); }

Graph random_graph(int n, std::uint64_t seed) {
  if (n < 0) throw PreconditionError("random_graph: negative order");
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.coin()) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace anchorrec
