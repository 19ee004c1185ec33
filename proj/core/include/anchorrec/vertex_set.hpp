#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace anchorrec {

using Vertex = int;

/// A subset of the vertices 0..universe-1 of some host graph.
///
/// Stored as a dense bitset; also used for shadows and neighbourhoods.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet full(int universe);
  static VertexSet from_words(int universe, std::span<const std::uint64_t> words);

  int universe() const noexcept { return universe_; }
  int size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  bool contains(Vertex v) const noexcept;
  void insert(Vertex v);
  void erase(Vertex v);

  /// Members in ascending order.
  std::vector<Vertex> members() const;

  bool is_subset_of(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator|(const VertexSet& other) const;
  VertexSet complement() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

 private:
  void check(Vertex v) const;
  void require_same_universe(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept;
};

}  // namespace anchorrec
