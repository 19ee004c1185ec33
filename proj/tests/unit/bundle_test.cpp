#include <gtest/gtest.h>

#include <sstream>

#include "anchorrec/anchor.hpp"
#include "anchorrec/bundle.hpp"
#include "anchorrec/canonical.hpp"
#include "anchorrec/combinatorics.hpp"
#include "anchorrec/embedding.hpp"
#include "anchorrec/errors.hpp"
#include "oracles.hpp"

using namespace anchorrec;

namespace {

ReconstructionError::Kind failure_kind(const AdjacentBundle& bundle) {
  try {
    reconstruct(bundle);
  } catch (const ReconstructionError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "reconstruct succeeded";
  return ReconstructionError::Kind::kCorruptBundle;
}

struct Stable {
  Graph g;
  VertexSet s;
};

Stable stable_instance(int n, int m, std::uint64_t seed) {
  for (std::uint64_t t = 0;; ++t) {
    const Graph g = random_graph(n, derive_seed(seed, t));
    const auto r = find_stable_anchor(g, m, 32, t);
    if (r.found()) return {g, r.certificate->anchor};
  }
}

}  // namespace

TEST(BuildBundle, PairCounts) {
  const Graph g = random_graph(9, 1);
  EXPECT_EQ(build_bundle(g, VertexSet(9, {0, 1, 2, 3, 4, 5, 6})).total_pairs(), 1U);
  EXPECT_EQ(build_bundle(g, VertexSet(9, {0, 1, 2, 3})).total_pairs(), 10U);
  EXPECT_THROW(build_bundle(g, VertexSet(9, {0, 1, 2, 3, 4, 5, 6, 7})), PreconditionError);
  EXPECT_THROW(build_bundle(g, VertexSet(9)), PreconditionError);
}

TEST(BuildBundle, TwentyVertices) {
  const Graph g = random_graph(20, 7);
  const VertexSet s = Rng(8).subset(20, 10);
  const auto bundle = build_bundle(g, s);
  EXPECT_EQ(bundle.total_pairs(), 45U);
  EXPECT_EQ(bundle.host_order, 20);
  EXPECT_EQ(canonical_key(bundle.anchor), canonical_key(induced_subgraph(g, s)));
  const Graph h = induced_subgraph(g, s);
  for (const auto& [key, mult] : bundle.pair_graphs) {
    EXPECT_EQ(key.order(), 12);
    EXPECT_GE(count_induced_copies(key.graph(), h), 1U);
  }
}

TEST(Reconstruct, SmallestCase) {
  // n - m = 2: one pair-graph, which is the whole graph.
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}});
  for_each_subset(5, 3, [&](std::span<const Vertex> members) {
    const VertexSet s(5, members);
    if (!is_stable_anchor(g, s).stable()) return;
    EXPECT_TRUE(are_isomorphic(reconstruct(build_bundle(g, s)), g));
  });
}

TEST(Reconstruct, ExhaustiveSixVertices) {
  int checked = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << 15); ++code) {
    const Graph g = oracle::graph_from_code(6, code);
    for (int k = 1; k <= 4; ++k) {
      for_each_subset(6, k, [&](std::span<const Vertex> members) {
        const VertexSet s(6, members);
        if (!is_stable_anchor(g, s).stable()) return;
        ++checked;
        ASSERT_TRUE(oracle::brute_isomorphic(reconstruct(build_bundle(g, s)), g)) << code << " " << s.to_string();
      });
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Reconstruct, RandomTwentyFour) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = stable_instance(24, 11, seed);
    const auto bundle = build_bundle(inst.g, inst.s);
    const Graph rebuilt = reconstruct(bundle);
    EXPECT_TRUE(are_isomorphic(rebuilt, inst.g));
    // The rebuilt graph carries the anchor on vertices 0..m-1.
    EXPECT_EQ(canonical_key(induced_subgraph(rebuilt, VertexSet(24, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}))),
              canonical_key(bundle.anchor));
  }
}

TEST(Reconstruct, ResultIndependentOfLabeling) {
  Rng rng(4);
  const auto inst = stable_instance(20, 10, 99);
  const auto p = oracle::random_permutation(20, rng);
  EXPECT_EQ(build_bundle(inst.g, inst.s), build_bundle(relabel(inst.g, p), p.apply(inst.s)));
}

TEST(Reconstruct, CorruptBundles) {
  const auto inst = stable_instance(16, 8, 5);
  const auto bundle = build_bundle(inst.g, inst.s);

  auto dropped = bundle;
  auto first = dropped.pair_graphs.begin();
  if (--first->second == 0) dropped.pair_graphs.erase(first);
  EXPECT_EQ(failure_kind(dropped), ReconstructionError::Kind::kCorruptBundle);

  // Swap one pair-graph for a graph with no copy of the anchor.
  auto replaced = bundle;
  first = replaced.pair_graphs.begin();
  if (--first->second == 0) replaced.pair_graphs.erase(first);
  replaced.pair_graphs[canonical_key(empty_graph(10))] += 1;
  EXPECT_EQ(failure_kind(replaced), ReconstructionError::Kind::kCorruptBundle);

  auto doubled = bundle;
  doubled.pair_graphs.begin()->second += 1;
  EXPECT_EQ(failure_kind(doubled), ReconstructionError::Kind::kCorruptBundle);

  auto wrong_order = bundle;
  wrong_order.host_order = 17;
  EXPECT_EQ(failure_kind(wrong_order), ReconstructionError::Kind::kCorruptBundle);
}

TEST(Reconstruct, UnstableAnchorsReported) {
  // Twins 3 and 4 share the shadow {0}.
  const Graph twins(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}});
  const auto kind = failure_kind(build_bundle(twins, VertexSet(5, {0, 1, 2})));
  EXPECT_TRUE(kind == ReconstructionError::Kind::kInconsistentShadows ||
              kind == ReconstructionError::Kind::kShadowNotInvariant);

  // K_2 occurs twice in every pair-graph of a complete host.
  EXPECT_EQ(failure_kind(build_bundle(complete_graph(5), VertexSet(5, {0, 1}))),
            ReconstructionError::Kind::kAmbiguousAnchor);

  // Triangle with 3 on 0 and 4 on 1: the triangle's symmetries move both shadows.
  const Graph flip(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
  EXPECT_EQ(failure_kind(build_bundle(flip, VertexSet(5, {0, 1, 2}))), ReconstructionError::Kind::kShadowNotInvariant);
}

TEST(BundleText, RoundTrip) {
  const auto inst = stable_instance(18, 9, 6);
  const auto bundle = build_bundle(inst.g, inst.s);
  std::stringstream io;
  write_bundle(io, bundle);
  const auto back = read_bundle(io);
  EXPECT_EQ(back, bundle);
  EXPECT_TRUE(are_isomorphic(reconstruct(back), inst.g));
}

TEST(BundleText, Errors) {
  std::istringstream truncated("bundle m=3 n=5 anchor=Bw\nDQc");
  EXPECT_THROW(read_bundle(truncated), ParseError);
  std::istringstream no_header("");
  EXPECT_THROW(read_bundle(no_header), ParseError);
}
