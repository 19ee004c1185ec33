#include <gtest/gtest.h>

#include <set>

#include "anchorrec/canonical.hpp"
#include "anchorrec/combinatorics.hpp"
#include "anchorrec/embedding.hpp"
#include "anchorrec/errors.hpp"
#include "oracles.hpp"

using namespace anchorrec;

TEST(Embeddings, EdgeIntoTriangle) {
  EXPECT_EQ(find_induced_embeddings(complete_graph(2), complete_graph(3), 100).size(), 6U);
  EXPECT_EQ(count_induced_embeddings(complete_graph(2), complete_graph(3)), 6U);
}

TEST(Embeddings, TriangleIntoPentagon) {
  EXPECT_TRUE(find_induced_embeddings(complete_graph(3), cycle_graph(5), 100).empty());
}

TEST(Embeddings, PathIntoPentagon) {
  const Graph p3 = path_graph(3);
  const Graph c5 = cycle_graph(5);
  const auto found = find_induced_embeddings(p3, c5, 100);
  EXPECT_EQ(found.size(), 10U);
  for (const auto& e : found) EXPECT_EQ(induced_subgraph(c5, VertexSet(5, std::span<const Vertex>(e))).edge_count(), 2U);
}

TEST(Embeddings, EachIsInduced) {
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const Graph host = random_graph(9, rng.next());
    const Graph pattern = random_graph(4, rng.next());
    for (const auto& e : find_induced_embeddings(pattern, host, 1000)) {
      std::set<Vertex> distinct(e.begin(), e.end());
      ASSERT_EQ(distinct.size(), e.size());
      for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) ASSERT_EQ(pattern.has_edge(u, v), host.has_edge(e[u], e[v]));
    }
  }
}

TEST(Embeddings, LimitRespected) {
  EXPECT_EQ(find_induced_embeddings(complete_graph(2), complete_graph(10), 7).size(), 7U);
  EXPECT_THROW(find_induced_embeddings(complete_graph(5), complete_graph(3), 1), PreconditionError);
}

TEST(Embeddings, EmptyPatternHasOneEmbedding) {
  EXPECT_EQ(count_induced_embeddings(Graph(0), cycle_graph(4)), 1U);
}

TEST(CountCopies, Examples) {
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(count_induced_copies(complete_graph(n), complete_graph(2)), binomial(n, 2));
  EXPECT_EQ(count_induced_copies(cycle_graph(5), path_graph(3)), 5U);
  EXPECT_EQ(count_induced_copies(cycle_graph(4), path_graph(3)), 4U);
  EXPECT_EQ(count_induced_copies(cycle_graph(5), complete_graph(3)), 0U);
}

TEST(CountCopies, OracleAgreement) {
  Rng rng(17);
  for (int t = 0; t < 400; ++t) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const Graph host = random_graph(n, rng.next());
    const Graph pattern = oracle::random_graph_p(k, 0.5, rng);
    const auto expected = oracle::brute_count_copies(host, pattern);
    ASSERT_EQ(count_induced_copies_by_subsets(host, pattern), expected);
    ASSERT_EQ(count_induced_copies_by_embeddings(host, pattern), expected);
    ASSERT_EQ(count_induced_copies(host, pattern), expected);
  }
}

TEST(CountCopies, RoutesAgreeOnLargerHosts) {
  Rng rng(19);
  for (int t = 0; t < 60; ++t) {
    const int n = 12 + static_cast<int>(rng.below(10));
    const int k = 2 + static_cast<int>(rng.below(4));
    const double p = 0.2 + 0.6 * rng.uniform();
    const Graph host = oracle::random_graph_p(n, p, rng);
    const Graph pattern = induced_subgraph(host, rng.subset(n, k));
    const auto by_subsets = count_induced_copies_by_subsets(host, pattern);
    EXPECT_GE(by_subsets, 1U);
    EXPECT_EQ(count_induced_copies_by_embeddings(host, pattern), by_subsets);
    EXPECT_EQ(count_induced_copies(host, pattern), by_subsets);
  }
}

TEST(CountCopies, SymmetricPatterns) {
  // Ordering constraints must suppress every duplicate of a symmetric pattern.
  EXPECT_EQ(count_induced_copies(complete_graph(12), complete_graph(6)), binomial(12, 6));
  EXPECT_EQ(count_induced_copies(empty_graph(14), empty_graph(7)), binomial(14, 7));
  EXPECT_EQ(count_induced_copies_by_embeddings(cycle_graph(12), path_graph(5)), 12U);
}

TEST(InducedCopies, OnePerVertexSet) {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const int n = 6 + static_cast<int>(rng.below(5));
    const Graph host = oracle::random_graph_p(n, 0.2 + 0.6 * rng.uniform(), rng);
    const Graph pattern = induced_subgraph(host, rng.subset(n, 3 + static_cast<int>(rng.below(3))));
    std::set<VertexSet> seen;
    const auto visited = for_each_induced_copy(pattern, host, [&](std::span<const Vertex> e) {
      EXPECT_TRUE(seen.insert(VertexSet(n, e)).second);
      return true;
    });
    EXPECT_EQ(visited, seen.size());
    EXPECT_EQ(visited, oracle::brute_count_copies(host, pattern));
  }
}

TEST(InducedCopies, VisitorCanStop) {
  int calls = 0;
  const auto visited = for_each_induced_copy(complete_graph(2), complete_graph(6), [&](std::span<const Vertex>) {
    return ++calls < 3;
  });
  EXPECT_EQ(calls, 3);
  EXPECT_EQ(visited, 3U);
  EXPECT_EQ(find_induced_copies(complete_graph(2), complete_graph(6), 4).size(), 4U);
}

TEST(CountCopies, DeckOfSmallGraphSumsToBinomial) {
  // Every 3-subset induces exactly one of the four classes.
  const auto classes = enumerate_classes(3);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = random_graph(10, s);
    std::uint64_t total = 0;
    for (const auto& key : classes) total += count_induced_copies(g, key.graph());
    EXPECT_EQ(total, binomial(10, 3));
  }
}
