#include "anchorrec/vertex_set.hpp"

#include <bit>
#include <sstream>

#include "anchorrec/errors.hpp"

namespace anchorrec {

namespace {
std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }
}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw PreconditionError("VertexSet: negative universe");
  words_.assign(word_count(universe), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::from_words(int universe, std::span<const std::uint64_t> words) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < s.words_.size() && i < words.size(); ++i) s.words_[i] = words[i];
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

int VertexSet::size() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

void VertexSet::check(Vertex v) const {
  if (v < 0 || v >= universe_)
    throw PreconditionError("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe_));
}

bool VertexSet::contains(Vertex v) const noexcept {
  if (v < 0 || v >= universe_) return false;
  return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w != 0; w &= w - 1)
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
  }
  return out;
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) throw PreconditionError("VertexSet: universe mismatch");
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  require_same_universe(other);
  VertexSet out(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  require_same_universe(other);
  VertexSet out(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (universe_ % 64 != 0 && !out.words_.empty())
    out.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

// Orders by universe, then by the ascending member list.
std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  return a.members() <=> b.members();
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(s.universe());
  for (auto w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace anchorrec
