#include "anchorrec/deck.hpp"

#include <ostream>

#include "anchorrec/combinatorics.hpp"
#include "anchorrec/embedding.hpp"
#include "anchorrec/errors.hpp"
#include "anchorrec/graph6.hpp"
#include "anchorrec/rng.hpp"
#include "detail/multiset_text.hpp"

namespace anchorrec {

std::uint64_t Deck::total() const {
  std::uint64_t sum = 0;
  for (const auto& [key, c] : counts) sum = checked_add(sum, c);
  return sum;
}

std::uint64_t Deck::count(const CanonicalKey& key) const {
  auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

Deck full_deck(const Graph& g, int m, std::uint64_t budget) {
  if (m < 0 || m > g.order()) throw PreconditionError("full_deck: need 0 <= m <= |V(G)|");
  const auto subsets = binomial_saturating(static_cast<std::uint64_t>(g.order()), static_cast<std::uint64_t>(m));
  if (subsets > budget)
    throw CapacityError("full_deck: C(" + std::to_string(g.order()) + ", " + std::to_string(m) +
                        ") subsets exceed the enumeration budget of " + std::to_string(budget) +
                        "; use sampled_deck");
  Deck deck;
  deck.subgraph_order = m;
  deck.host_order = g.order();
  deck.mode = DeckMode::kFull;
  for_each_subset(g.order(), m, [&](std::span<const Vertex> members) {
    ++deck.counts[canonical_key(induced_subgraph(g, members))];
  });
  return deck;
}

Deck sampled_deck(const Graph& g, int m, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw PreconditionError("sampled_deck: samples must be >= 1");
  if (m < 0 || m > g.order()) throw PreconditionError("sampled_deck: need 0 <= m <= |V(G)|");
  Deck deck;
  deck.subgraph_order = m;
  deck.host_order = g.order();
  deck.mode = DeckMode::kSampled;
  Rng rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i)
    ++deck.counts[canonical_key(induced_subgraph(g, rng.subset(g.order(), m)))];
  return deck;
}

std::uint64_t kelly_count(const Deck& deck, const Graph& h, int n) {
  const int m = deck.subgraph_order;
  const int k = h.order();
  if (k > m) throw PreconditionError("kelly_count: pattern order exceeds deck order");
  if (n < m) throw PreconditionError("kelly_count: deck order exceeds host order");
  if (deck.host_order != n) throw PreconditionError("kelly_count: deck was built for a different host order");
  if (deck.mode != DeckMode::kFull) throw PreconditionError("kelly_count: needs a full deck, not a sampled one");
  const auto expected = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m));
  if (deck.total() != expected)
    throw PreconditionError("kelly_count: deck holds " + std::to_string(deck.total()) + " subgraphs, expected C(n,m) = " +
                            std::to_string(expected));

  // Every copy of H sits inside exactly C(n-k, m-k) of the m-subsets.
  std::uint64_t covered = 0;
  for (const auto& [key, c] : deck.counts) {
    if (key.order() != m) throw InconsistentDeckError("kelly_count: deck entry of wrong order");
    covered = checked_add(covered, checked_mul(count_induced_copies(key.graph(), h), c));
  }
  const auto per_copy = binomial(static_cast<std::uint64_t>(n - k), static_cast<std::uint64_t>(m - k));
  if (covered % per_copy != 0)
    throw InconsistentDeckError("kelly_count: " + std::to_string(covered) + " is not divisible by C(n-k, m-k) = " +
                                std::to_string(per_copy));
  return covered / per_copy;
}

DeckComparison decide_iso_by_deck(const Graph& a, const Graph& b, int m, std::uint64_t budget) {
  if (a.order() != b.order()) throw PreconditionError("decide_iso_by_deck: graphs have different orders");
  const auto da = full_deck(a, m, budget);
  const auto db = full_deck(b, m, budget);
  DeckComparison cmp;
  auto ia = da.counts.begin();
  auto ib = db.counts.begin();
  // Merge walk in key order; the first differing class is the witness.
  while (ia != da.counts.end() || ib != db.counts.end()) {
    if (ib == db.counts.end() || (ia != da.counts.end() && ia->first < ib->first)) {
      cmp.witness = ia->first;
      cmp.first_count = ia->second;
      break;
    }
    if (ia == da.counts.end() || ib->first < ia->first) {
      cmp.witness = ib->first;
      cmp.second_count = ib->second;
      break;
    }
    if (ia->second != ib->second) {
      cmp.witness = ia->first;
      cmp.first_count = ia->second;
      cmp.second_count = ib->second;
      break;
    }
    ++ia;
    ++ib;
  }
  cmp.verdict = cmp.witness ? DeckComparison::Verdict::kDifferentDecks : DeckComparison::Verdict::kEqualDecks;
  return cmp;
}

void write_deck(std::ostream& out, const Deck& deck) {
  out << "deck m=" << deck.subgraph_order << " n=" << deck.host_order
      << " mode=" << (deck.mode == DeckMode::kFull ? "full" : "sampled") << '\n';
  for (const auto& [key, c] : deck.counts) out << key.graph6() << ' ' << c << '\n';
}

Deck read_deck(std::istream& in) {
  const auto all = detail::slurp(in);
  const auto lines = detail::split_lines(all);
  if (lines.empty()) throw ParseError("deck: empty input", 0);
  const auto header = detail::parse_header(lines[0], "deck");
  Deck deck;
  const auto& [m, m_at] = header.at("m", lines[0].offset);
  const auto& [n, n_at] = header.at("n", lines[0].offset);
  const auto& [mode, mode_at] = header.at("mode", lines[0].offset);
  deck.subgraph_order = static_cast<int>(detail::parse_uint(m, m_at, "m"));
  deck.host_order = static_cast<int>(detail::parse_uint(n, n_at, "n"));
  if (mode == "full") {
    deck.mode = DeckMode::kFull;
  } else if (mode == "sampled") {
    deck.mode = DeckMode::kSampled;
  } else {
    throw ParseError("deck: mode must be 'full' or 'sampled'", mode_at);
  }
  detail::read_entries(lines, 1, deck.counts);
  for (const auto& [key, c] : deck.counts)
    if (key.order() != deck.subgraph_order) throw ParseError("deck: entry order differs from header m", lines[0].offset);
  return deck;
}

}  // namespace anchorrec
