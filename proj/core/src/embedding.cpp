#include "anchorrec/embedding.hpp"

#include <algorithm>

#include "anchorrec/canonical.hpp"
#include "anchorrec/combinatorics.hpp"
#include "anchorrec/errors.hpp"
#include "detail/bits.hpp"

namespace anchorrec {

namespace {

using detail::Bits;

// phi(first) < phi(second) must hold for every accepted embedding.
struct OrderConstraint {
  Vertex first;
  Vertex second;
};

// Forward-checking backtracking over pattern vertices, most constrained first.
// Each unmapped pattern vertex keeps a domain of host vertices consistent with
// every assignment made so far (adjacency and non-adjacency both constrain).
template <std::size_t W>
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& pattern, const Graph& host, std::span<const OrderConstraint> constraints,
                  const std::function<bool(std::span<const Vertex>)>& visit)
      : k_(pattern.order()),
        n_(host.order()),
        host_full_(Bits<W>::first_n(host.order())),
        pattern_(detail::load_rows<W>(pattern)),
        host_(detail::load_rows<W>(host)),
        domains_(static_cast<std::size_t>(k_ + 1) * static_cast<std::size_t>(k_)),
        map_(static_cast<std::size_t>(k_), -1),
        after_(static_cast<std::size_t>(k_)),
        before_(static_cast<std::size_t>(k_)),
        visit_(visit) {
    for (const auto& c : constraints) {
      after_[c.first].push_back(c.second);
      before_[c.second].push_back(c.first);
    }
    host_degree_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) host_degree_[v] = host_[v].count();
    for (Vertex u = 0; u < k_; ++u) {
      const int deg = pattern_[u].count();
      Bits<W> dom;
      for (Vertex v = 0; v < n_; ++v) {
        // Induced copies need enough neighbours and enough non-neighbours.
        if (host_degree_[v] >= deg && (n_ - 1 - host_degree_[v]) >= (k_ - 1 - deg)) dom.set(v);
      }
      domain(0, u) = dom;
    }
  }

  std::uint64_t run() {
    if (k_ == 0) {
      ++found_;
      visit_(map_);
      return found_;
    }
    search(0, Bits<W>::first_n(k_));
    return found_;
  }

 private:
  Bits<W>& domain(int depth, int u) {
    return domains_[static_cast<std::size_t>(depth) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(u)];
  }

  Bits<W> above(int v) const { return ~Bits<W>::first_n(v + 1) & host_full_; }
  Bits<W> below(int v) const { return Bits<W>::first_n(v); }

  // Returns false when the visitor asked to stop.
  bool search(int depth, Bits<W> unmapped) {
    if (depth == k_) {
      ++found_;
      return visit_(map_);
    }
    int pick = -1;
    int best = 0;
    unmapped.for_each([&](int u) {
      int c = domain(depth, u).count();
      if (pick < 0 || c < best) {
        pick = u;
        best = c;
      }
    });
    if (best == 0) return true;

    Bits<W> rest = unmapped;
    rest.reset(pick);
    const int need_adj = (pattern_[pick] & rest).count();
    const int need_non = rest.count() - need_adj;

    bool keep_going = true;
    const Bits<W> candidates = domain(depth, pick);
    candidates.for_each([&](int v) {
      if (!keep_going) return;
      used_.set(v);
      const Bits<W> avail = ~used_ & host_full_;
      const int have_adj = (host_[v] & avail).count();
      const int have_non = avail.count() - have_adj;
      if (have_adj >= need_adj && have_non >= need_non && propagate(depth, pick, v, rest)) {
        map_[pick] = v;
        keep_going = search(depth + 1, rest);
        map_[pick] = -1;
      }
      used_.reset(v);
    });
    return keep_going;
  }

  bool propagate(int depth, int u, int v, const Bits<W>& rest) {
    const Bits<W> adj = host_[v];
    const Bits<W> non = ~host_[v] & host_full_;
    bool ok = true;
    rest.for_each([&](int x) {
      if (!ok) return;
      Bits<W> d = domain(depth, x) & (pattern_[u].test(x) ? adj : non);
      d.reset(v);
      domain(depth + 1, x) = d;
    });
    for (int x : after_[u])
      if (rest.test(x)) domain(depth + 1, x) &= above(v);
    for (int x : before_[u])
      if (rest.test(x)) domain(depth + 1, x) &= below(v);
    rest.for_each([&](int x) { ok = ok && !domain(depth + 1, x).none(); });
    return ok;
  }

  int k_;
  int n_;
  Bits<W> host_full_;
  std::vector<Bits<W>> pattern_;
  std::vector<Bits<W>> host_;
  std::vector<int> host_degree_;
  std::vector<Bits<W>> domains_;
  Embedding map_;
  Bits<W> used_;
  std::vector<std::vector<int>> after_;
  std::vector<std::vector<int>> before_;
  const std::function<bool(std::span<const Vertex>)>& visit_;
  std::uint64_t found_ = 0;
};

void check_sizes(const Graph& pattern, const Graph& host) {
  if (pattern.order() > host.order())
    throw PreconditionError("pattern has more vertices than host");
}

std::uint64_t run_search(const Graph& pattern, const Graph& host, std::span<const OrderConstraint> constraints,
                         const std::function<bool(std::span<const Vertex>)>& visit) {
  check_sizes(pattern, host);
  return detail::with_width(host.order(), [&](auto width) {
    EmbeddingSearch<decltype(width)::value> search(pattern, host, constraints, visit);
    return search.run();
  });
}

// For base point b_j with level orbit O_j: phi(b_j) < phi(u) for u in O_j \ {b_j}.
// Each coset phi * Aut(pattern) then has exactly one member satisfying all constraints.
std::vector<OrderConstraint> symmetry_constraints(const Graph& pattern) {
  std::vector<OrderConstraint> out;
  const auto group = automorphism_group(pattern);
  if (group.is_trivial()) return out;
  for (std::size_t j = 0; j < group.levels(); ++j) {
    const Vertex b = group.base()[j];
    for (Vertex u : group.level_orbit(j))
      if (u != b) out.push_back({b, u});
  }
  return out;
}

}  // namespace

std::vector<Embedding> find_induced_embeddings(const Graph& pattern, const Graph& host,
                                               std::uint64_t limit) {
  if (limit < 1) throw PreconditionError("find_induced_embeddings: limit must be >= 1");
  std::vector<Embedding> out;
  run_search(pattern, host, {}, [&](std::span<const Vertex> e) {
    out.emplace_back(e.begin(), e.end());
    return out.size() < limit;
  });
  return out;
}

std::uint64_t count_induced_embeddings(const Graph& pattern, const Graph& host) {
  return run_search(pattern, host, {}, [](std::span<const Vertex>) { return true; });
}

std::uint64_t for_each_induced_copy(const Graph& pattern, const Graph& host,
                                    const std::function<bool(std::span<const Vertex>)>& visit) {
  check_sizes(pattern, host);
  const auto constraints = symmetry_constraints(pattern);
  return run_search(pattern, host, constraints, visit);
}

std::vector<VertexSet> find_induced_copies(const Graph& pattern, const Graph& host, std::uint64_t limit) {
  if (limit < 1) throw PreconditionError("find_induced_copies: limit must be >= 1");
  std::vector<VertexSet> out;
  for_each_induced_copy(pattern, host, [&](std::span<const Vertex> e) {
    out.emplace_back(host.order(), e);
    return out.size() < limit;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_induced_copies_by_subsets(const Graph& host, const Graph& pattern) {
  check_sizes(pattern, host);
  const int n = host.order();
  const int k = pattern.order();
  const auto target = canonical_key(pattern);
  const auto edges = pattern.edge_count();
  std::uint64_t count = 0;
  for_each_subset(n, k, [&](std::span<const Vertex> members) {
    Graph sub = induced_subgraph(host, members);
    if (sub.edge_count() == edges && canonical_key(sub) == target) ++count;
  });
  return count;
}

std::uint64_t count_induced_copies_by_embeddings(const Graph& host, const Graph& pattern) {
  const auto ordered = count_induced_embeddings(pattern, host);
  const auto aut = automorphism_group(pattern).order();
  if (ordered % aut != 0)
    throw Error("count_induced_copies_by_embeddings: embedding count not divisible by |Aut|");
  return ordered / aut;
}

std::uint64_t count_induced_copies(const Graph& host, const Graph& pattern) {
  check_sizes(pattern, host);
  constexpr std::uint64_t kSubsetBudget = 4096;
  const auto subsets = binomial_saturating(static_cast<std::uint64_t>(host.order()),
                                           static_cast<std::uint64_t>(pattern.order()));
  if (pattern.order() <= 2 || subsets <= kSubsetBudget) return count_induced_copies_by_subsets(host, pattern);
  return for_each_induced_copy(pattern, host, [](std::span<const Vertex>) { return true; });
}

}  // namespace anchorrec
