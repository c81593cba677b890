#include "bnpoly/dags.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "bnpoly/encodings.hpp"

namespace bnpoly {

bool is_acyclic(std::span<const Subset> parents, int n) {
  if (static_cast<int>(parents.size()) != n) throw std::invalid_argument("parent map must cover every node");
  const Subset all = Subset::full(n);
  for (Subset p : parents) {
    if (!p.is_subset_of(all)) throw std::invalid_argument("parent outside the ground set");
  }
  // Repeatedly peel nodes whose parents are all placed.
  Subset placed;
  for (int round = 0; round < n; ++round) {
    bool progressed = false;
    for (int v = 0; v < n; ++v) {
      if (!placed.contains(v) && parents[static_cast<std::size_t>(v)].is_subset_of(placed)) {
        placed = placed.with(v);
        progressed = true;
      }
    }
    if (placed == all) return true;
    if (!progressed) return false;
  }
  return placed == all;
}

Dag::Dag(int n, std::vector<Subset> parents) : parents_(std::move(parents)) {
  if (n < 1 || n > kMaxNodes) throw std::invalid_argument("ground set size out of range");
  if (!is_acyclic(parents_, n)) throw std::invalid_argument("parent map has a directed cycle");
}

Dag Dag::empty(int n) { return Dag(n, std::vector<Subset>(static_cast<std::size_t>(n))); }

Dag Dag::full(int n, std::span<const int> order) {
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("order must list every node");
  std::vector<Subset> parents(static_cast<std::size_t>(n));
  Subset before;
  for (int v : order) {
    if (v < 0 || v >= n || before.contains(v)) throw std::invalid_argument("order is not a permutation");
    parents[static_cast<std::size_t>(v)] = before;
    before = before.with(v);
  }
  return Dag(n, std::move(parents));
}

Dag Dag::full(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  return full(n, order);
}

int Dag::arc_count() const {
  int count = 0;
  for (Subset p : parents_) count += p.size();
  return count;
}

std::vector<int> Dag::topological_order() const {
  const int n = size();
  std::vector<int> order;
  Subset placed;
  while (static_cast<int>(order.size()) < n) {
    for (int v = 0; v < n; ++v) {
      if (!placed.contains(v) && parents(v).is_subset_of(placed)) {
        order.push_back(v);
        placed = placed.with(v);
      }
    }
  }
  return order;
}

Dag Dag::reversed(int from, int to) const {
  if (!has_arc(from, to)) throw std::invalid_argument("no such arc to reverse");
  std::vector<Subset> p = parents_;
  p[static_cast<std::size_t>(to)] = p[static_cast<std::size_t>(to)].without(from);
  p[static_cast<std::size_t>(from)] = p[static_cast<std::size_t>(from)].with(to);
  return Dag(size(), std::move(p));
}

std::vector<Dag> enumerate_dags(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("exhaustive DAG enumeration supports n <= 5");
  // Odometer over parent masks, node 0 most significant, filtered by acyclicity.
  std::vector<std::vector<Subset>> choices(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const Subset others = Subset::full(n).without(v);
    for (Subset s : subsets_of(others)) choices[static_cast<std::size_t>(v)].push_back(s);
  }
  std::vector<Dag> out;
  std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
  std::vector<Subset> parents(static_cast<std::size_t>(n));
  while (true) {
    for (int v = 0; v < n; ++v) parents[static_cast<std::size_t>(v)] = choices[static_cast<std::size_t>(v)][digit[static_cast<std::size_t>(v)]];
    if (is_acyclic(parents, n)) out.emplace_back(n, parents);
    int pos = n - 1;
    while (pos >= 0) {
      auto& d = digit[static_cast<std::size_t>(pos)];
      if (++d < choices[static_cast<std::size_t>(pos)].size()) break;
      d = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::vector<Immorality> immoralities(const Dag& g) {
  std::vector<Immorality> out;
  const int n = g.size();
  for (int c = 0; c < n; ++c) {
    const auto pa = g.parents(c).elements();
    for (std::size_t i = 0; i < pa.size(); ++i) {
      for (std::size_t j = i + 1; j < pa.size(); ++j) {
        if (!g.adjacent(pa[i], pa[j])) {
          out.push_back({Subset::singleton(pa[i]).with(pa[j]), c});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> adjacencies(const Dag& g) {
  std::vector<Subset> out;
  for (int v = 0; v < g.size(); ++v) {
    for (int p : g.parents(v).elements()) out.push_back(Subset::singleton(p).with(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool markov_equivalent(const Dag& g, const Dag& h) {
  if (g.size() != h.size()) throw std::invalid_argument("graphs over different ground sets");
  return adjacencies(g) == adjacencies(h) && immoralities(g) == immoralities(h);
}

std::vector<Dag> covered_arc_neighbors(const Dag& g) {
  std::vector<Dag> out;
  for (int b = 0; b < g.size(); ++b) {
    for (int a : g.parents(b).elements()) {
      if (g.parents(b) == g.parents(a).with(a)) out.push_back(g.reversed(a, b));
    }
  }
  return out;
}

std::vector<Dag> equivalence_class(const Dag& g) {
  std::set<Dag> seen{g};
  std::deque<Dag> queue{g};
  while (!queue.empty()) {
    Dag cur = std::move(queue.front());
    queue.pop_front();
    for (Dag& nb : covered_arc_neighbors(cur)) {
      if (seen.insert(nb).second) queue.push_back(std::move(nb));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<EquivalenceClass> enumerate_equivalence_classes(int n) {
  // Group by characteristic imset; enumeration order makes the first member of
  // each group the lexicographically least.
  const auto dags = enumerate_dags(n);
  std::unordered_map<std::uint64_t, std::size_t> index_of_key;
  std::vector<EquivalenceClass> classes;
  for (const Dag& g : dags) {
    const std::uint64_t key = char_imset_bits(g);
    auto [it, inserted] = index_of_key.emplace(key, classes.size());
    if (inserted) {
      classes.push_back({g, 1});
    } else {
      ++classes[it->second].size;
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const EquivalenceClass& x, const EquivalenceClass& y) { return x.representative < y.representative; });
  return classes;
}

bool is_closed_under_equivalence(std::span<const Dag> members, std::span<const Dag> universe) {
  std::set<std::uint64_t> keys;
  std::set<Dag> in(members.begin(), members.end());
  for (const Dag& g : members) keys.insert(char_imset_bits(g));
  for (const Dag& h : universe) {
    if (keys.count(char_imset_bits(h)) && !in.count(h)) return false;
  }
  return true;
}

bool is_full_graph(const Dag& g) {
  const int n = g.size();
  return g.arc_count() == n * (n - 1) / 2;
}

}  // namespace bnpoly
