#include <gtest/gtest.h>

#include <sstream>

#include "anchorrec/canonical.hpp"
#include "anchorrec/combinatorics.hpp"
#include "anchorrec/deck.hpp"
#include "anchorrec/embedding.hpp"
#include "anchorrec/errors.hpp"
#include "oracles.hpp"

using namespace anchorrec;

namespace {

Graph p3_plus_vertex() { return Graph(3, {{0, 1}}); }  // K_2 + K_1

Deck deck_of(int m, int n, std::initializer_list<std::pair<Graph, std::uint64_t>> entries) {
  Deck d;
  d.subgraph_order = m;
  d.host_order = n;
  for (const auto& [g, c] : entries) d.counts[canonical_key(g)] = c;
  return d;
}

}  // namespace

TEST(FullDeck, Examples) {
  EXPECT_EQ(full_deck(complete_graph(3), 2), deck_of(2, 3, {{complete_graph(2), 3}}));
  EXPECT_EQ(full_deck(path_graph(3), 2), deck_of(2, 3, {{complete_graph(2), 2}, {empty_graph(2), 1}}));
  EXPECT_EQ(full_deck(cycle_graph(4), 3), deck_of(3, 4, {{path_graph(3), 4}}));
}

TEST(FullDeck, TotalsAndBudget) {
  const Graph g = random_graph(14, 2);
  EXPECT_EQ(full_deck(g, 5).total(), binomial(14, 5));
  EXPECT_THROW(full_deck(g, 7, 100), CapacityError);
  try {
    full_deck(g, 7, 100);
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("sampled_deck"), std::string::npos);
  }
}

TEST(SampledDeck, Examples) {
  const auto one = sampled_deck(random_graph(12, 1), 5, 1, 9);
  EXPECT_EQ(one.counts.size(), 1U);
  EXPECT_EQ(one.total(), 1U);
  EXPECT_EQ(one.mode, DeckMode::kSampled);
  const auto k = sampled_deck(complete_graph(15), 6, 500, 3);
  ASSERT_EQ(k.counts.size(), 1U);
  EXPECT_EQ(k.count(canonical_key(complete_graph(6))), 500U);
  EXPECT_EQ(sampled_deck(random_graph(12, 1), 5, 50, 9), sampled_deck(random_graph(12, 1), 5, 50, 9));
}

TEST(SampledDeck, NearlyAllDistinctAtForty) {
  // C(40,16) ~ 6.3e10 subsets; repeats of a subset or of a class are rare.
  const auto d = sampled_deck(random_graph(40, 11), 16, 10000, 12);
  EXPECT_EQ(d.total(), 10000U);
  EXPECT_GE(d.counts.size(), 9990U);
}

TEST(KellyCount, Examples) {
  EXPECT_EQ(kelly_count(full_deck(cycle_graph(4), 3), complete_graph(2), 4), 4U);
  EXPECT_EQ(kelly_count(full_deck(complete_graph(4), 3), complete_graph(2), 4), 6U);
  EXPECT_EQ(kelly_count(full_deck(empty_graph(4), 3), complete_graph(2), 4), 0U);
}

TEST(KellyCount, MatchesDirectCount) {
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    const int n = 6 + static_cast<int>(rng.below(5));
    const Graph g = random_graph(n, rng.next());
    const int m = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2)));
    const auto deck = full_deck(g, m);
    for (int k = 1; k <= std::min(m, 5); ++k)
      for (const auto& key : enumerate_classes(k))
        ASSERT_EQ(kelly_count(deck, key.graph(), n), count_induced_copies(g, key.graph()));
  }
}

TEST(KellyCount, Errors) {
  const auto deck = full_deck(cycle_graph(5), 3);
  EXPECT_THROW(kelly_count(deck, complete_graph(4), 5), PreconditionError);
  EXPECT_THROW(kelly_count(deck, complete_graph(2), 6), PreconditionError);
  EXPECT_THROW(kelly_count(sampled_deck(cycle_graph(5), 3, 10, 1), complete_graph(2), 5), PreconditionError);
  // Ten cards, but 9*2 + 1 = 19 edge incidences is not divisible by C(3,1).
  Deck bad = deck_of(3, 5, {{path_graph(3), 9}, {p3_plus_vertex(), 1}});
  EXPECT_THROW(kelly_count(bad, complete_graph(2), 5), InconsistentDeckError);
}

TEST(DecideIso, PathVersusStar) {
  const auto a = full_deck(path_graph(4), 3);
  const auto b = full_deck(star_graph(3), 3);
  EXPECT_EQ(a, deck_of(3, 4, {{path_graph(3), 2}, {p3_plus_vertex(), 2}}));
  EXPECT_EQ(b, deck_of(3, 4, {{path_graph(3), 3}, {empty_graph(3), 1}}));
  const auto verdict = decide_iso_by_deck(path_graph(4), star_graph(3), 3);
  EXPECT_EQ(verdict.verdict, DeckComparison::Verdict::kDifferentDecks);
  EXPECT_TRUE(verdict.conclusive());
  ASSERT_TRUE(verdict.witness.has_value());
  EXPECT_EQ(verdict.first_count, a.count(*verdict.witness));
  EXPECT_EQ(verdict.second_count, b.count(*verdict.witness));
  EXPECT_NE(verdict.first_count, verdict.second_count);
}

TEST(DecideIso, RelabelGivesEqualDecks) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const int n = 5 + static_cast<int>(rng.below(8));
    const Graph g = random_graph(n, rng.next());
    const auto verdict = decide_iso_by_deck(g, relabel(g, oracle::random_permutation(n, rng)), 4);
    EXPECT_EQ(verdict.verdict, DeckComparison::Verdict::kEqualDecks);
    EXPECT_FALSE(verdict.conclusive());
  }
  EXPECT_THROW(decide_iso_by_deck(cycle_graph(5), cycle_graph(6), 3), PreconditionError);
}

TEST(DeckText, RoundTrip) {
  for (const auto& deck : {full_deck(random_graph(11, 4), 5), sampled_deck(random_graph(30, 4), 10, 200, 1)}) {
    std::stringstream io;
    write_deck(io, deck);
    EXPECT_EQ(read_deck(io), deck);
  }
}

TEST(DeckText, Format) {
  std::ostringstream out;
  write_deck(out, full_deck(path_graph(3), 2));
  EXPECT_EQ(out.str(), "deck m=2 n=3 mode=full\nA? 1\nA_ 2\n");
}

TEST(DeckText, Errors) {
  std::istringstream bad_header("dek m=2 n=3 mode=full\n");
  EXPECT_THROW(read_deck(bad_header), ParseError);
  std::istringstream bad_count("deck m=2 n=3 mode=full\nA_ x\n");
  EXPECT_THROW(read_deck(bad_count), ParseError);
  std::istringstream wrong_order("deck m=2 n=3 mode=full\nBg 1\n");
  EXPECT_THROW(read_deck(wrong_order), ParseError);
}
