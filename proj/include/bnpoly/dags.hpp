#pragma once

// Acyclic directed graphs over a ground set, stored as per-node parent masks.

#include <cstddef>
#include <span>
#include <vector>

#include "bnpoly/ground_model.hpp"

namespace bnpoly {

/// True iff the parent map admits a consonant total order. A node listed among
/// its own parents counts as a cycle. Throws std::invalid_argument when a parent
/// lies outside the ground set.
bool is_acyclic(std::span<const Subset> parents, int n);

class Dag {
 public:
  /// Throws std::invalid_argument unless the parent map is acyclic and within N.
  Dag(int n, std::vector<Subset> parents);

  static Dag empty(int n);
  /// The full graph consonant with the order given (a permutation of 0..n-1).
  static Dag full(int n, std::span<const int> order);
  /// The full graph consonant with 0 < 1 < ... < n-1.
  static Dag full(int n);

  int size() const { return static_cast<int>(parents_.size()); }
  Subset parents(int node) const { return parents_.at(static_cast<std::size_t>(node)); }
  const std::vector<Subset>& parent_map() const { return parents_; }

  bool has_arc(int from, int to) const { return parents(to).contains(from); }
  bool adjacent(int a, int b) const { return has_arc(a, b) || has_arc(b, a); }
  int arc_count() const;

  /// Some consonant total order (parents first).
  std::vector<int> topological_order() const;

  /// Copy with the arc from->to replaced by to->from; the result must be acyclic.
  Dag reversed(int from, int to) const;

  friend bool operator==(const Dag&, const Dag&) = default;
  /// Lexicographic on the parent map, node 0 first.
  friend auto operator<=>(const Dag& x, const Dag& y) { return x.parents_ <=> y.parents_; }

 private:
  std::vector<Subset> parents_;
};

/// Every acyclic parent map over n nodes exactly once, in mask-lex order of
/// (parents(0), parents(1), ...). Counts: 3, 25, 543, 29281 for n = 2..5.
std::vector<Dag> enumerate_dags(int n);
inline std::vector<Dag> enumerate_dags(const GroundSet& gs) { return enumerate_dags(gs.size()); }

struct Immorality {
  Subset pair;   ///< the two non-adjacent parents
  int collider;  ///< their common child

  friend bool operator==(const Immorality&, const Immorality&) = default;
  friend auto operator<=>(const Immorality&, const Immorality&) = default;
};

/// All induced a->c<-b with a, b non-adjacent, sorted.
std::vector<Immorality> immoralities(const Dag& g);

/// Unordered adjacent pairs, sorted by mask.
std::vector<Subset> adjacencies(const Dag& g);

/// Same adjacencies and same immoralities. Throws on ground-set mismatch.
bool markov_equivalent(const Dag& g, const Dag& h);

/// One graph per covered arc a->b (pa(b) = pa(a) + a), with that arc reversed.
std::vector<Dag> covered_arc_neighbors(const Dag& g);

/// Closure of {g} under covered-arc reversals, sorted.
std::vector<Dag> equivalence_class(const Dag& g);

struct EquivalenceClass {
  Dag representative;  ///< lexicographically least member
  std::size_t size;
};

/// Partition of enumerate_dags(n) into Markov equivalence classes, ordered by
/// representative. Counts: 2, 11, 185 for n = 2..4.
std::vector<EquivalenceClass> enumerate_equivalence_classes(int n);
inline std::vector<EquivalenceClass> enumerate_equivalence_classes(const GroundSet& gs) {
  return enumerate_equivalence_classes(gs.size());
}

/// True iff every graph Markov equivalent to a member is also a member.
/// `universe` must be the full enumeration the members are drawn from.
bool is_closed_under_equivalence(std::span<const Dag> members, std::span<const Dag> universe);

bool is_full_graph(const Dag& g);

}  // namespace bnpoly
