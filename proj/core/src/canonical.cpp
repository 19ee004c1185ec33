#include "anchorrec/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <set>

#include "anchorrec/errors.hpp"
#include "anchorrec/graph6.hpp"
#include "detail/bits.hpp"

namespace anchorrec {

namespace detail {
struct KeyBuilder {
  static CanonicalKey make(int order, std::vector<std::uint64_t> words) {
    CanonicalKey k;
    k.order_ = order;
    k.words_ = std::move(words);
    return k;
  }
};
}  // namespace detail

namespace {

using detail::Bits;

std::size_t pair_index(int i, int j) {
  return static_cast<std::size_t>(j) * static_cast<std::size_t>(j - 1) / 2 + static_cast<std::size_t>(i);
}

// Lexicographic-minimum relabelling search.
//
// Position j of the labelling contributes the segment adj(p0,v) .. adj(p{j-1},v)
// to the adjacency string, so at every node only the vertices with the
// smallest segment can lead to the minimum. Subtrees are skipped when their
// first vertex is in the orbit of an explored sibling under automorphisms
// (found from tied leaves) that fix the current prefix.
template <std::size_t W>
class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g)
      : n_(g.order()),
        full_(Bits<W>::first_n(g.order())),
        adj_(detail::load_rows<W>(g)),
        codes_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)),
        perm_(static_cast<std::size_t>(n_)),
        chosen_(static_cast<std::size_t>(n_)) {}

  void run() {
    if (n_ == 0) return;
    search(0, false);
  }

  const std::vector<int>& best_perm() const { return best_perm_; }
  const std::vector<std::vector<int>>& autos() const { return autos_; }

 private:
  Bits<W>& code(int depth, int v) {
    return codes_[static_cast<std::size_t>(depth) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }

  bool fixes_prefix(const std::vector<int>& g, int depth) const {
    for (int i = 0; i < depth; ++i)
      if (g[perm_[i]] != perm_[i]) return false;
    return true;
  }

  void extend_codes(int d, const Bits<W>& remaining) {
    remaining.for_each([&](int v) {
      if (d == 0) {
        code(0, v) = Bits<W>{};
        return;
      }
      auto c = code(d - 1, v);
      if (adj_[perm_[d - 1]].test(v)) c.set_msb(d - 1);
      code(d, v) = c;
    });
  }

  std::vector<int> mapping_to_best() const {
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) gamma[perm_[i]] = best_perm_[i];
    return gamma;
  }

  void search(int d, bool tied) {
    if (d == n_) {
      leaf(tied);
      return;
    }
    const Bits<W> remaining = ~used_ & full_;
    extend_codes(d, remaining);

    Bits<W> min_code;
    bool first = true;
    remaining.for_each([&](int v) {
      if (first || code(d, v) < min_code) {
        min_code = code(d, v);
        first = false;
      }
    });
    if (tied) {
      if (best_codes_[d] < min_code) return;
      if (min_code < best_codes_[d]) tied = false;
    }
    chosen_[d] = min_code;

    Bits<W> candidates;
    remaining.for_each([&](int v) {
      if (code(d, v) == min_code) candidates.set(v);
    });

    Bits<W> explored;
    std::size_t orbit_autos = 0;
    std::vector<int> roots;
    detail::Orbits orbits(0);
    candidates.for_each([&](int v) {
      if (!explored.none() && !autos_.empty()) {
        if (orbit_autos != autos_.size()) {
          orbits = detail::Orbits(n_);
          for (const auto& g : autos_)
            if (fixes_prefix(g, d)) orbits.absorb(g);
          orbit_autos = autos_.size();
        }
        bool seen = false;
        const int root = orbits.find(v);
        explored.for_each([&](int e) { seen = seen || orbits.find(e) == root; });
        if (seen) return;
      }
      perm_[d] = v;
      used_.set(v);
      search(d + 1, tied);
      used_.reset(v);
      explored.set(v);
      // Whatever the child found, the best labelling now shares this prefix.
      tied = true;
    });
  }

  void leaf(bool tied) {
    if (!has_best_ || !tied) {
      best_perm_ = perm_;
      best_codes_ = chosen_;
      has_best_ = true;
      return;
    }
    auto gamma = mapping_to_best();
    bool identity = true;
    for (int v = 0; v < n_ && identity; ++v) identity = gamma[v] == v;
    if (!identity) autos_.push_back(std::move(gamma));
  }

  int n_;
  Bits<W> full_;
  std::vector<Bits<W>> adj_;
  std::vector<Bits<W>> codes_;
  std::vector<int> perm_;
  std::vector<Bits<W>> chosen_;
  Bits<W> used_;

  bool has_best_ = false;
  std::vector<int> best_perm_;
  std::vector<Bits<W>> best_codes_;
  std::vector<std::vector<int>> autos_;
};

// Individualization-refinement search for larger orders.
//
// Nodes are equitable ordered partitions; a child individualizes one vertex
// of the first non-singleton cell. Leaves are discrete partitions and the
// key is the smallest adjacency string over the leaves. Equal leaves give
// automorphisms, which prune sibling orbits and cut back to the point where
// the new leaf's path left the first or best path.
template <std::size_t W>
class RefineSearch {
 public:
  explicit RefineSearch(const Graph& g)
      : n_(g.order()),
        adj_(detail::load_rows<W>(g)),
        path_(static_cast<std::size_t>(n_)),
        count_(static_cast<std::size_t>(n_)),
        in_queue_(static_cast<std::size_t>(n_)) {}

  void run() {
    Partition p;
    p.lab.resize(static_cast<std::size_t>(n_));
    p.cell.assign(static_cast<std::size_t>(n_), 0);
    p.end.assign(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) p.lab[v] = v;
    p.end[0] = n_;
    refine(p, {0});
    search(p, 0);
  }

  const std::vector<int>& best_perm() const { return best_.lab; }
  const std::vector<std::vector<int>>& autos() const { return autos_; }

 private:
  struct Partition {
    std::vector<int> lab;   // position -> vertex
    std::vector<int> cell;  // vertex -> start of its cell
    std::vector<int> end;   // cell start -> one past its last position
  };

  struct Leaf {
    std::vector<int> lab;
    std::vector<std::uint64_t> words;
    std::vector<int> path;
  };

  static constexpr int kNoJump = std::numeric_limits<int>::max();

  void refine(Partition& p, std::vector<int> queue) {
    std::fill(in_queue_.begin(), in_queue_.end(), 0);
    for (int s : queue) in_queue_[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int s = queue[head];
      in_queue_[s] = 0;
      Bits<W> splitter;
      for (int i = s; i < p.end[s]; ++i) splitter.set(p.lab[i]);
      for (int c = 0; c < n_;) {
        const int e = p.end[c];
        if (e - c > 1 && split(p, c, e, splitter)) {
          for (int a = c; a < e; a = p.end[a]) {
            if (!in_queue_[a]) {
              in_queue_[a] = 1;
              queue.push_back(a);
            }
          }
        }
        c = e;
      }
    }
  }

  bool split(Partition& p, int c, int e, const Bits<W>& splitter) {
    bool uniform = true;
    for (int i = c; i < e; ++i) {
      const int v = p.lab[i];
      count_[v] = (adj_[v] & splitter).count();
      uniform = uniform && count_[v] == count_[p.lab[c]];
    }
    if (uniform) return false;
    std::stable_sort(p.lab.begin() + c, p.lab.begin() + e, [&](int a, int b) { return count_[a] < count_[b]; });
    int a = c;
    for (int i = c + 1; i <= e; ++i) {
      if (i == e || count_[p.lab[i]] != count_[p.lab[a]]) {
        p.end[a] = i;
        for (int k = a; k < i; ++k) p.cell[p.lab[k]] = a;
        a = i;
      }
    }
    return true;
  }

  void individualize(Partition& p, int v) {
    const int c = p.cell[v];
    const int e = p.end[c];
    const auto pos = std::find(p.lab.begin() + c, p.lab.begin() + e, v);
    std::iter_swap(p.lab.begin() + c, pos);
    p.end[c] = c + 1;
    p.end[c + 1] = e;
    for (int i = c + 1; i < e; ++i) p.cell[p.lab[i]] = c + 1;
    refine(p, {c});
  }

  bool fixes_path(const std::vector<int>& g, int depth) const {
    for (int i = 0; i < depth; ++i)
      if (g[path_[i]] != path_[i]) return false;
    return true;
  }

  void search(const Partition& p, int depth) {
    int target = -1;
    for (int c = 0; c < n_ && target < 0; c = p.end[c])
      if (p.end[c] - c > 1) target = c;
    if (target < 0) {
      leaf(p, depth);
      return;
    }
    std::vector<int> members(p.lab.begin() + target, p.lab.begin() + p.end[target]);
    std::sort(members.begin(), members.end());

    std::vector<int> explored;
    std::size_t orbit_autos = 0;
    detail::Orbits orbits(n_);
    for (int v : members) {
      if (!explored.empty() && !autos_.empty()) {
        if (orbit_autos != autos_.size()) {
          orbits.reset();
          for (const auto& g : autos_)
            if (fixes_path(g, depth)) orbits.absorb(g);
          orbit_autos = autos_.size();
        }
        const int root = orbits.find(v);
        if (std::any_of(explored.begin(), explored.end(), [&](int e) { return orbits.find(e) == root; })) continue;
      }
      Partition child = p;
      individualize(child, v);
      path_[depth] = v;
      search(child, depth + 1);
      if (jump_ < depth) return;
      jump_ = kNoJump;
      explored.push_back(v);
    }
  }

  void leaf(const Partition& p, int depth) {
    Leaf here;
    here.lab = p.lab;
    here.words = string_of(p.lab);
    here.path.assign(path_.begin(), path_.begin() + depth);
    if (first_.lab.empty()) {
      first_ = here;
      best_ = std::move(here);
      return;
    }
    for (const Leaf* known : {&first_, &best_}) {
      if (here.words != known->words) continue;
      std::vector<int> gamma(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) gamma[known->lab[i]] = here.lab[i];
      autos_.push_back(std::move(gamma));
      int k = 0;
      while (k < depth && k < static_cast<int>(known->path.size()) && known->path[k] == here.path[k]) ++k;
      jump_ = k;
      return;
    }
    if (here.words < best_.words) best_ = std::move(here);
  }

  std::vector<std::uint64_t> string_of(const std::vector<int>& lab) const {
    const auto bits = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
    std::vector<std::uint64_t> words((bits + 63) / 64, 0);
    std::size_t t = 0;
    for (int j = 1; j < n_; ++j) {
      const auto& row = adj_[lab[j]];
      for (int i = 0; i < j; ++i, ++t)
        if (row.test(lab[i])) words[t / 64] |= std::uint64_t{1} << (63 - t % 64);
    }
    return words;
  }

  int n_;
  std::vector<Bits<W>> adj_;
  std::vector<int> path_;
  std::vector<int> count_;
  std::vector<char> in_queue_;
  int jump_ = kNoJump;
  Leaf first_;
  Leaf best_;
  std::vector<std::vector<int>> autos_;
};

// Orders up to this use the exact lexicographic minimum.
constexpr int kExactCanonicalOrder = 10;

struct SearchResult {
  std::vector<int> best;
  std::vector<std::vector<int>> autos;
};

SearchResult run_search(const Graph& g) {
  SearchResult r;
  if (g.order() == 0) return r;
  detail::with_width(g.order(), [&](auto width) {
    constexpr std::size_t w = decltype(width)::value;
    if (g.order() <= kExactCanonicalOrder) {
      CanonSearch<w> search(g);
      search.run();
      r.best = search.best_perm();
      r.autos = search.autos();
    } else {
      RefineSearch<w> search(g);
      search.run();
      r.best = search.best_perm();
      r.autos = search.autos();
    }
  });
  return r;
}

// Schreier-Sims along a base listing every vertex. Returns the basic orbits.
std::vector<std::vector<Vertex>> basic_orbits(int n, const std::vector<std::vector<int>>& generators,
                                              const std::vector<int>& base) {
  using Perm = std::vector<int>;
  const auto compose = [n](const Perm& a, const Perm& b) {  // a after b
    Perm c(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) c[v] = a[b[v]];
    return c;
  };
  const auto inverse = [n](const Perm& a) {
    Perm c(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) c[a[v]] = v;
    return c;
  };

  std::vector<Perm> strong = generators;
  // reps[l][x] maps base[l] to x; empty when x is outside the orbit.
  std::vector<std::vector<Perm>> reps(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> orbit(static_cast<std::size_t>(n));

  const auto level_gens = [&](int l) {
    std::vector<const Perm*> out;
    for (const auto& s : strong) {
      bool fixes = true;
      for (int i = 0; i < l && fixes; ++i) fixes = s[base[i]] == base[i];
      if (fixes) out.push_back(&s);
    }
    return out;
  };
  const auto compute_orbit = [&](int l) {
    const auto gens = level_gens(l);
    reps[l].assign(static_cast<std::size_t>(n), Perm{});
    Perm id(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) id[v] = v;
    reps[l][base[l]] = id;
    orbit[l] = {base[l]};
    for (std::size_t head = 0; head < orbit[l].size(); ++head) {
      const int y = orbit[l][head];
      for (const Perm* s : gens) {
        const int x = (*s)[y];
        if (!reps[l][x].empty()) continue;
        reps[l][x] = compose(*s, reps[l][y]);
        orbit[l].push_back(x);
      }
    }
  };
  const auto sift = [&](Perm g, int from) -> std::pair<Perm, int> {
    for (int l = from; l < n; ++l) {
      const int y = g[base[l]];
      if (reps[l][y].empty()) return {g, l};
      g = compose(inverse(reps[l][y]), g);
    }
    return {g, n};
  };

  for (int l = 0; l < n; ++l) compute_orbit(l);
  int i = n - 1;
  while (i >= 0) {
    compute_orbit(i);
    const auto gens = level_gens(i);
    int restart = -1;
    for (std::size_t a = 0; a < orbit[i].size() && restart < 0; ++a) {
      const int x = orbit[i][a];
      for (const Perm* s : gens) {
        const Perm h = compose(inverse(reps[i][(*s)[x]]), compose(*s, reps[i][x]));
        auto [residue, level] = sift(h, i + 1);
        if (level == n) continue;
        strong.push_back(std::move(residue));
        for (int l = i + 1; l <= level; ++l) compute_orbit(l);
        restart = level;
        break;
      }
    }
    i = restart >= 0 ? restart : i - 1;
  }

  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    out[l].assign(orbit[l].begin(), orbit[l].end());
    std::sort(out[l].begin(), out[l].end());
  }
  return out;
}

CanonicalKey key_from_labeling(const Graph& g, const std::vector<int>& order_to_vertex);

}  // namespace

// ---------------------------------------------------------------------------
// CanonicalKey

CanonicalKey CanonicalKey::of_labeled(const Graph& g) {
  std::vector<int> identity(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) identity[v] = v;
  return key_from_labeling(g, identity);
}

std::size_t CanonicalKey::bit_count() const noexcept {
  const auto n = static_cast<std::size_t>(order_);
  return n * (n > 0 ? n - 1 : 0) / 2;
}

bool CanonicalKey::bit(std::size_t index) const {
  if (index >= bit_count()) throw PreconditionError("CanonicalKey::bit: index out of range");
  return (words_[index / 64] >> (63 - index % 64)) & 1U;
}

Graph CanonicalKey::graph() const {
  GraphBuilder b(order_);
  for (int j = 1; j < order_; ++j)
    for (int i = 0; i < j; ++i)
      if (bit(pair_index(i, j))) b.add_edge(i, j);
  return std::move(b).build();
}

std::string CanonicalKey::graph6() const { return graph6_encode(graph()); }

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& key) const noexcept {
  std::uint64_t h = static_cast<std::uint64_t>(key.order()) * 0x9e3779b97f4a7c15ULL;
  for (auto w : key.words()) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return static_cast<std::size_t>(h);
}

namespace {

CanonicalKey key_from_labeling(const Graph& g, const std::vector<int>& order_to_vertex) {
  const int n = g.order();
  const auto bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  std::vector<std::uint64_t> words((bits + 63) / 64, 0);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(order_to_vertex[i], order_to_vertex[j])) {
        auto t = pair_index(i, j);
        words[t / 64] |= std::uint64_t{1} << (63 - t % 64);
      }
    }
  }
  return detail::KeyBuilder::make(n, std::move(words));
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const auto r = run_search(g);
  CanonicalForm form;
  form.key = key_from_labeling(g, r.best);
  form.labeling = Permutation(r.best).inverse();
  return form;
}

CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (Vertex v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_key(a) == canonical_key(b);
}

// ---------------------------------------------------------------------------
// Automorphisms

AutomorphismGroup automorphism_group(const Graph& g) {
  AutomorphismGroup group;
  group.degree_ = g.order();
  if (g.order() == 0) return group;

  auto r = run_search(g);
  std::sort(r.autos.begin(), r.autos.end());
  r.autos.erase(std::unique(r.autos.begin(), r.autos.end()), r.autos.end());
  group.level_orbits_ = basic_orbits(g.order(), r.autos, r.best);
  group.base_ = r.best;
  for (auto& p : r.autos) group.generators_.emplace_back(std::move(p));
  return group;
}

std::uint64_t AutomorphismGroup::order() const {
  std::uint64_t total = 1;
  for (const auto& orbit : level_orbits_) {
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(orbit.size()), &total))
      throw CapacityError("automorphism group order exceeds 64 bits");
  }
  return total;
}

double AutomorphismGroup::log2_order() const {
  double total = 0.0;
  for (const auto& orbit : level_orbits_) total += std::log2(static_cast<double>(orbit.size()));
  return total;
}

std::vector<Permutation> automorphism_generators(const Graph& g) {
  return automorphism_group(g).generators();
}

bool is_asymmetric(const Graph& g) { return automorphism_group(g).is_trivial(); }

std::vector<Permutation> close_group(const std::vector<Permutation>& generators, int degree,
                                     std::size_t max_elements) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : generators) {
        auto q = g.compose(p);
        if (seen.insert(q).second) {
          if (seen.size() > max_elements) throw CapacityError("close_group: group too large");
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> colors(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) colors[v] = g.degree(v);
  int classes = -1;
  for (;;) {
    using Signature = std::pair<int, std::vector<int>>;
    std::vector<Signature> sigs(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      sigs[v].first = colors[v];
      for (Vertex u : neighbors(g, v).members()) sigs[v].second.push_back(colors[u]);
      std::sort(sigs[v].second.begin(), sigs[v].second.end());
    }
    std::vector<Signature> distinct = sigs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v)
      colors[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sigs[v]) - distinct.begin());
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }
  return colors;
}

// ---------------------------------------------------------------------------
// Isomorphism classes

std::vector<CanonicalKey> enumerate_classes(int m) {
  constexpr int kMaxClassOrder = 7;
  if (m < 0) throw PreconditionError("enumerate_classes: negative order");
  if (m > kMaxClassOrder)
    throw CapacityError("enumerate_classes: order " + std::to_string(m) + " exceeds limit of 7");

  static std::array<std::once_flag, kMaxClassOrder + 1> once;
  static std::array<std::vector<CanonicalKey>, kMaxClassOrder + 1> cache;
  std::call_once(once[m], [m] {
    if (m == 0) {
      cache[0] = {canonical_key(Graph(0))};
      return;
    }
    // Every m-vertex graph is an (m-1)-vertex graph plus one vertex.
    std::set<CanonicalKey> keys;
    for (const auto& smaller : enumerate_classes(m - 1)) {
      const Graph base = smaller.graph();
      for (std::uint32_t mask = 0; mask < (1U << (m - 1)); ++mask) {
        GraphBuilder b(m);
        for (auto [u, v] : base.edges()) b.add_edge(u, v);
        for (int u = 0; u < m - 1; ++u)
          if ((mask >> u) & 1U) b.add_edge(u, m - 1);
        keys.insert(canonical_key(std::move(b).build()));
      }
    }
    cache[m].assign(keys.begin(), keys.end());
  });
  return cache[m];
}

}  // namespace anchorrec
