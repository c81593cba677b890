#pragma once

// Shared helpers for the unit and property tests: seeded generators and
// brute-force oracles that do not go through the library code under test.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bnpoly/dags.hpp"
#include "bnpoly/ground_model.hpp"

namespace testing {

using namespace bnpoly;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Acyclic iff repeatedly removing parentless nodes empties the graph.
inline bool acyclic_by_peeling(const std::vector<Subset>& parents) {
  const int n = static_cast<int>(parents.size());
  Subset left = Subset::full(n);
  bool progress = true;
  while (!left.empty() && progress) {
    progress = false;
    for (int v : left.elements()) {
      if ((parents[static_cast<std::size_t>(v)] & left).empty()) {
        left = left.without(v);
        progress = true;
      }
    }
  }
  return left.empty();
}

// Every parent map over n nodes, acyclic or not.
inline std::vector<std::vector<Subset>> all_parent_maps(int n) {
  std::vector<std::vector<Subset>> out{{}};
  for (int v = 0; v < n; ++v) {
    std::vector<std::vector<Subset>> next;
    for (const auto& partial : out) {
      for (Subset p : subsets_of(Subset::full(n).without(v))) {
        auto m = partial;
        m.push_back(p);
        next.push_back(std::move(m));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline Dag random_dag(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng());
  std::vector<Subset> parents(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (uniform(0, 1)) parents[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
          parents[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])].with(order[static_cast<std::size_t>(j)]);
    }
  }
  return Dag(n, std::move(parents));
}

// Random integer function on sets of size >= 2.
inline CharVector random_char(int n, int lo = -5, int hi = 5) {
  CharVector m(n);
  for (Subset s : enumerate_cai(n)) m.set(s, uniform(lo, hi));
  return m;
}

// Non-negative combination of sums of subset indicators: m(S) = sum over T within S of w(T), w >= 0 on
// |T| >= 2. Such functions are standardized and supermodular.
inline SetFunction random_supermodular(int n) {
  CharVector w(n);
  for (Subset t : enumerate_cai(n)) w.set(t, uniform(0, 1) ? uniform(0, 3) : 0);
  SetFunction m(n);
  for (Subset s : enumerate_power_set(n)) {
    Rational v = 0;
    for (Subset t : subsets_of(s)) v += w.at(t);
    m.set(s, v);
  }
  return m;
}

}  // namespace testing
