#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "anchorrec/graph.hpp"
#include "anchorrec/vertex_set.hpp"

namespace anchorrec {

/// Injective map from pattern vertices to host vertices: host vertex of pattern vertex u is e[u].
using Embedding = std::vector<Vertex>;

/// Ordered induced embeddings of `pattern` into `host`, at most `limit` of them.
/// Requires pattern.order() <= host.order() and limit >= 1.
std::vector<Embedding> find_induced_embeddings(const Graph& pattern, const Graph& host,
                                               std::uint64_t limit);

/// Number of ordered induced embeddings.
std::uint64_t count_induced_embeddings(const Graph& pattern, const Graph& host);

/// Visits exactly one embedding per host vertex set inducing a copy of
/// `pattern`. The visitor returns false to stop. Returns the number visited.
///
/// Duplicates are suppressed with ordering constraints derived from the
/// pattern's stabilizer chain, so the cost does not scale with |Aut(pattern)|.
std::uint64_t for_each_induced_copy(const Graph& pattern, const Graph& host,
                                    const std::function<bool(std::span<const Vertex>)>& visit);

/// Host vertex sets of induced copies of `pattern`, at most `limit` of them.
std::vector<VertexSet> find_induced_copies(const Graph& pattern, const Graph& host,
                                           std::uint64_t limit);

/// C_G(F): number of vertex subsets of `host` inducing a graph isomorphic to `pattern`.
/// Chooses subset enumeration or embedding search by problem size.
std::uint64_t count_induced_copies(const Graph& host, const Graph& pattern);

/// C_G(F) by canonical comparison of every |V(F)|-subset.
std::uint64_t count_induced_copies_by_subsets(const Graph& host, const Graph& pattern);

/// C_G(F) as (ordered embeddings) / |Aut(F)|.
std::uint64_t count_induced_copies_by_embeddings(const Graph& host, const Graph& pattern);

}  // namespace anchorrec
