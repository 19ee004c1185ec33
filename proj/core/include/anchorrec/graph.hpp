#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "anchorrec/permutation.hpp"
#include "anchorrec/vertex_set.hpp"

namespace anchorrec {

/// Undirected simple graph on vertices 0..order-1 with bitset adjacency rows.
///
/// Symmetric and loop-free by construction. Graphs are immutable once built;
/// use GraphBuilder (or the factories below) to make one.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of the given order.
  explicit Graph(int order);
  Graph(int order, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int order() const noexcept { return order_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  std::size_t edge_count() const noexcept;
  /// Edges as (u, v) with u < v, row-major.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  std::span<const std::uint64_t> row(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  void check_vertex(Vertex v) const;

  int order_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int order);

  int order() const noexcept { return graph_.order(); }
  /// Loops are a precondition violation.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return graph_.has_edge(u, v); }

  Graph build() && { return std::move(graph_); }
  Graph build() const& { return graph_; }

 private:
  Graph graph_;
};

// Named families used throughout tests and examples.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,leaves}: vertex 0 is the centre.
Graph star_graph(int leaves);

Graph complement(const Graph& g);

/// Graph h with h.has_edge(p(u), p(v)) == g.has_edge(u, v).
Graph relabel(const Graph& g, const Permutation& p);

/// Induced subgraph on `s`; vertices renumbered 0..|s|-1 in ascending original order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> ascending_members);

VertexSet neighbors(const Graph& g, Vertex v);

/// Uniform G(n, 1/2): every pair u < v, visited row-major, is an edge with
/// probability one half. Deterministic for a given seed.
Graph random_graph(int n, std::uint64_t seed);

}  // namespace anchorrec
