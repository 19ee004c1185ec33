#include "anchorrec/permutation.hpp"

#include <numeric>
#include <sstream>

#include "anchorrec/errors.hpp"

namespace anchorrec {

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Vertex v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[v])
      throw PreconditionError("Permutation: image is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<Vertex>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) p.image_[image_[i]] = static_cast<Vertex>(i);
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw PreconditionError("Permutation::compose: size mismatch");
  Permutation p;
  p.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) p.image_[i] = image_[other.image_[i]];
  return p;
}

VertexSet Permutation::apply(const VertexSet& s) const {
  if (s.universe() != size()) throw PreconditionError("Permutation::apply: universe mismatch");
  VertexSet out(size());
  for (Vertex v : s.members()) out.insert(image_[v]);
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < image_.size(); ++i) os << (i ? " " : "") << image_[i];
  os << ']';
  return os.str();
}

}  // namespace anchorrec
