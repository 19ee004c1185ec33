#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>

#include "anchorrec/canonical.hpp"
#include "anchorrec/graph.hpp"

namespace anchorrec {

enum class DeckMode { kFull, kSampled };

/// S_m(G): multiset of the m-vertex induced subgraphs of an n-vertex graph,
/// keyed by canonical form.
struct Deck {
  int subgraph_order = 0;
  int host_order = 0;
  DeckMode mode = DeckMode::kFull;
  std::map<CanonicalKey, std::uint64_t> counts;

  std::uint64_t total() const;
  std::uint64_t count(const CanonicalKey& key) const;

  friend bool operator==(const Deck&, const Deck&) = default;
};

inline constexpr std::uint64_t kDefaultDeckBudget = 5'000'000;

/// Exact deck over all C(n, m) subsets. Throws CapacityError (pointing at
/// sampled_deck) when C(n, m) exceeds `budget`.
Deck full_deck(const Graph& g, int m, std::uint64_t budget = kDefaultDeckBudget);

/// Deck over `samples` uniform m-subsets drawn with replacement.
Deck sampled_deck(const Graph& g, int m, std::uint64_t samples, std::uint64_t seed);

/// C_G(H) recovered from a complete deck of order m >= k = |V(H)|:
/// sum over deck entries (F, c) of C_F(H) * c, divided by C(n - k, m - k).
///
/// Throws PreconditionError for k > m or an incomplete/sampled deck, and
/// InconsistentDeckError when the division is not exact.
std::uint64_t kelly_count(const Deck& deck, const Graph& h, int n);

struct DeckComparison {
  enum class Verdict { kEqualDecks, kDifferentDecks };

  Verdict verdict = Verdict::kEqualDecks;
  /// A class whose multiplicities differ, with both multiplicities.
  std::optional<CanonicalKey> witness;
  std::uint64_t first_count = 0;
  std::uint64_t second_count = 0;

  /// Equal decks only suggest isomorphism (almost surely for m >= 3 log2 n); different decks prove
  /// non-isomorphism.
  bool conclusive() const noexcept { return verdict == Verdict::kDifferentDecks; }
};

/// Compares full m-decks of two graphs of equal order.
DeckComparison decide_iso_by_deck(const Graph& a, const Graph& b, int m,
                                  std::uint64_t budget = kDefaultDeckBudget);

/// Text format: header "deck m=<m> n=<n> mode=<full|sampled>", then one
/// "<graph6> <multiplicity>" line per class in key order.
void write_deck(std::ostream& out, const Deck& deck);
Deck read_deck(std::istream& in);

}  // namespace anchorrec
