#pragma once

#include <span>
#include <string>
#include <vector>

#include "anchorrec/vertex_set.hpp"

namespace anchorrec {

/// A bijection on 0..n-1, stored as its image table: `p(v) == image()[v]`.
class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionError unless `image` is a bijection on 0..size-1.
  explicit Permutation(std::vector<Vertex> image);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  Vertex operator()(Vertex v) const { return image_.at(static_cast<std::size_t>(v)); }
  std::span<const Vertex> image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// (this * other)(v) = this(other(v)).
  Permutation compose(const Permutation& other) const;
  VertexSet apply(const VertexSet& s) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

}  // namespace anchorrec
