#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "anchorrec/graph.hpp"
#include "anchorrec/permutation.hpp"

namespace anchorrec {

namespace detail {
struct KeyBuilder;
}

/// Bit-exact canonical form of a graph: the order plus the adjacency string
/// x(0,1) x(0,2) x(1,2) x(0,3) ... of the canonically relabelled graph.
///
/// Up to 10 vertices the canonical relabelling is the one whose adjacency
/// string is lexicographically smallest over all n! relabellings. Larger
/// graphs take the smallest string over the leaves of an
/// individualization-refinement tree. Either way two keys are equal exactly
/// when the graphs are isomorphic. Keys order by (order, string).
class CanonicalKey {
 public:
  CanonicalKey() = default;

  /// Adjacency string of `g` under its current labelling (no canonicalization).
  static CanonicalKey of_labeled(const Graph& g);

  int order() const noexcept { return order_; }
  std::size_t bit_count() const noexcept;
  bool bit(std::size_t index) const;
  /// Packed adjacency string, first bit in the most significant position.
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// The canonical representative graph.
  Graph graph() const;
  std::string graph6() const;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  friend struct detail::KeyBuilder;

  int order_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const noexcept;
};

struct CanonicalForm {
  CanonicalKey key;
  /// Maps each vertex to its canonical position: relabel(g, labeling) has key's adjacency.
  Permutation labeling;
};

CanonicalForm canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);

/// Isomorphism test by canonical-key equality.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Aut(G) described by a stabilizer chain along the canonical base.
///
/// `base()[j]` is the j-th vertex of the canonical labelling and
/// `level_orbit(j)` is the orbit of that vertex under the subgroup fixing
/// base()[0..j-1] pointwise. The generators generate the whole group.
class AutomorphismGroup {
 public:
  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::span<const Vertex> base() const noexcept { return base_; }
  const std::vector<Vertex>& level_orbit(std::size_t level) const { return level_orbits_.at(level); }
  std::size_t levels() const noexcept { return level_orbits_.size(); }

  bool is_trivial() const noexcept { return generators_.empty(); }
  /// Exact group order; throws CapacityError if it does not fit in 64 bits.
  std::uint64_t order() const;
  double log2_order() const;

 private:
  friend AutomorphismGroup automorphism_group(const Graph& g);

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Vertex> base_;
  std::vector<std::vector<Vertex>> level_orbits_;
};

AutomorphismGroup automorphism_group(const Graph& g);
std::vector<Permutation> automorphism_generators(const Graph& g);
bool is_asymmetric(const Graph& g);

/// Closes a generating set into the full list of group elements. For tests
/// and tiny groups only; throws CapacityError above `max_elements`.
std::vector<Permutation> close_group(const std::vector<Permutation>& generators, int degree,
                                     std::size_t max_elements = 1'000'000);

/// Equitable colouring from iterated neighbourhood refinement (1-WL).
/// Colours are comparable across graphs: isomorphic vertices get equal colours.
std::vector<int> refine_colors(const Graph& g);

/// One key per isomorphism class of m-vertex graphs, ascending. m <= 7.
std::vector<CanonicalKey> enumerate_classes(int m);

}  // namespace anchorrec
