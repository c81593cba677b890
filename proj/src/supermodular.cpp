#include "bnpoly/supermodular.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bnpoly {

Rational delta(const SetFunction& m, int a, int b, Subset z) {
  if (a == b || z.contains(a) || z.contains(b)) throw std::invalid_argument("delta needs distinct a, b outside Z");
  return m.at(z.with(a).with(b)) + m.at(z) - m.at(z.with(a)) - m.at(z.with(b));
}

Rational delta_sets(const SetFunction& m, Subset a, Subset b, Subset z) {
  if (!(a & b).empty() || !(a & z).empty() || !(b & z).empty()) {
    throw std::invalid_argument("delta needs pairwise disjoint sets");
  }
  return m.at(a | b | z) + m.at(z) - m.at(a | z) - m.at(b | z);
}

bool is_standardized(const SetFunction& m) {
  for (const auto& [s, v] : m.nonzeros()) {
    if (s.size() <= 1) return false;
  }
  return true;
}

std::vector<Triplet> elementary_triplets(int n) {
  std::vector<Triplet> out;
  const Subset all = Subset::full(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (Subset z : subsets_of(all.without(a).without(b))) out.push_back({a, b, z});
    }
  }
  return out;
}

bool is_supermodular(const SetFunction& m) {
  for (const auto& t : elementary_triplets(m.ground_size())) {
    if (sgn(delta(m, t.a, t.b, t.z)) < 0) return false;
  }
  return true;
}

bool is_supermodular_pairwise(const SetFunction& m) {
  const auto all = enumerate_power_set(m.ground_size());
  for (Subset c : all) {
    for (Subset d : all) {
      if (m.at(c | d) + m.at(c & d) < m.at(c) + m.at(d)) return false;
    }
  }
  return true;
}

bool is_extreme(const SetFunction& m) {
  if (m.is_zero()) throw std::invalid_argument("zero function spans no ray");
  if (!is_standardized(m)) throw std::invalid_argument("set function is not standardized");
  if (!is_supermodular(m)) throw std::invalid_argument("set function is not supermodular");
  const int n = m.ground_size();
  const auto cai = enumerate_cai(n);
  std::map<Subset, std::size_t> col;
  for (std::size_t i = 0; i < cai.size(); ++i) col[cai[i]] = i;
  std::vector<RationalVector> rows;
  for (const auto& t : elementary_triplets(n)) {
    if (sgn(delta(m, t.a, t.b, t.z)) != 0) continue;
    RationalVector row(cai.size(), Rational(0));
    auto put = [&](Subset s, int sign) {
      if (s.size() >= 2) row[col.at(s)] += sign;
    };
    put(t.z.with(t.a).with(t.b), 1);
    put(t.z, 1);
    put(t.z.with(t.a), -1);
    put(t.z.with(t.b), -1);
    rows.push_back(std::move(row));
  }
  return cai.size() - matrix_rank(std::move(rows), cai.size()) == 1;
}

std::vector<RationalVector> core_vertices(const SetFunction& m) {
  if (!is_supermodular(m)) throw std::invalid_argument("core vertices need a supermodular function");
  const int n = m.ground_size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::set<RationalVector> out;
  do {
    RationalVector v(static_cast<std::size_t>(n));
    Subset pred;
    for (int a : order) {
      v[static_cast<std::size_t>(a)] = m.at(pred.with(a)) - m.at(pred);
      pred = pred.with(a);
    }
    out.insert(std::move(v));
  } while (std::next_permutation(order.begin(), order.end()));
  return {out.begin(), out.end()};
}

SetFunction duality_transform(const SetFunction& m) {
  const int n = m.ground_size();
  const Subset all = Subset::full(n);
  SetFunction r(n);
  for (Subset t : enumerate_power_set(n)) r.set(t, m.at(all) - m.at(all - t));
  return r;
}

bool is_matroid_rank(const SetFunction& r, Subset ground) {
  const auto subsets = subsets_of(ground);
  for (Subset s : subsets) {
    if (r.at(s).get_den() != 1) throw std::invalid_argument("rank function must be integer valued");
  }
  if (sgn(r.at(Subset())) != 0) return false;
  for (Subset s : subsets) {
    for (int x : (ground - s).elements()) {
      const Rational step = r.at(s.with(x)) - r.at(s);
      if (sgn(step) < 0 || step > 1) return false;
      for (int y : (ground - s).elements()) {
        if (y <= x) continue;
        if (r.at(s.with(x)) + r.at(s.with(y)) < r.at(s.with(x).with(y)) + r.at(s)) return false;
      }
    }
  }
  return true;
}

bool is_connected_matroid(const SetFunction& r, Subset ground) {
  for (Subset s : subsets_of(ground)) {
    if (s.empty() || s == ground) continue;
    if (r.at(ground) == r.at(s) + r.at(ground - s)) return false;
  }
  return true;
}

SupermodularFn cluster_supermodular(int n, Subset c, int k) {
  if (!c.is_subset_of(Subset::full(n)) || c.size() < 2) throw std::invalid_argument("cluster needs at least two nodes");
  if (k < 1 || k > c.size() - 1) throw std::invalid_argument("cluster level out of range");
  SupermodularFn m(n);
  for (Subset s : enumerate_power_set(n)) m.set(s, std::max(0, (s & c).size() - k));
  return m;
}

std::vector<std::pair<Subset, int>> cluster_parameters(int n) {
  std::vector<std::pair<Subset, int>> out;
  for (Subset c : enumerate_cai(n)) {
    for (int k = 1; k < c.size(); ++k) out.emplace_back(c, k);
  }
  return out;
}

}  // namespace bnpoly
