#include "bnpoly/score_equivalence.hpp"

#include <set>

#include "bnpoly/polyhedra.hpp"

namespace bnpoly {

bool is_se_objective(const FamVector& obj) {
  const int n = obj.ground_size();
  const Subset all = Subset::full(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (Subset z : subsets_of(all.without(a).without(b))) {
        const Rational lhs = obj.at({b, z.with(a)}) + obj.at({a, z});
        const Rational rhs = obj.at({a, z.with(b)}) + obj.at({b, z});
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

SeObjective objective_from_setfn(const CharVector& m) {
  const int n = m.ground_size();
  SeObjective obj(n);
  for (const auto& idx : enumerate_family_indices(n)) {
    obj.set(idx, m.at(idx.parents.with(idx.node)) - m.at(idx.parents));
  }
  return obj;
}

CharVector setfn_from_objective(const FamVector& obj) {
  if (!is_se_objective(obj)) throw NotScoreEquivalent("objective is not score equivalent");
  const int n = obj.ground_size();
  CharVector m(n);
  // Sizes ascend, so m(D\{b}) is already set when D is reached.
  for (Subset d : enumerate_cai(n)) {
    const int b = d.elements().back();
    m.set(d, obj.at({b, d.without(b)}) + m.at(d.without(b)));
  }
  return m;
}

CharVector char_objective(const FamVector& obj) {
  if (!is_se_objective(obj)) throw NotScoreEquivalent("objective is not score equivalent");
  const int n = obj.ground_size();
  CharVector z(n);
  for (Subset t : enumerate_cai(n)) {
    std::optional<Rational> first;
    for (int b : t.elements()) {
      const Subset rest = t.without(b);
      Rational sum = 0;
      for (Subset k : subsets_of(rest)) {
        if (k.empty()) continue;
        const Rational v = obj.at({b, k});
        if ((rest.size() - k.size()) % 2 == 0) {
          sum += v;
        } else {
          sum -= v;
        }
      }
      if (!first) {
        first = sum;
      } else if (*first != sum) {
        throw std::logic_error("characteristic objective depends on the choice of node");
      }
    }
    z.set(t, *first);
  }
  return z;
}

CharVector moebius_down(const CharVector& m) {
  const int n = m.ground_size();
  CharVector z(n);
  for (Subset t : enumerate_cai(n)) {
    Rational sum = 0;
    for (Subset l : subsets_of(t)) {
      if (l.size() < 2) continue;
      if ((t.size() - l.size()) % 2 == 0) {
        sum += m.at(l);
      } else {
        sum -= m.at(l);
      }
    }
    z.set(t, sum);
  }
  return z;
}

CharVector moebius_up(const CharVector& z) {
  const int n = z.ground_size();
  CharVector m(n);
  for (Subset s : enumerate_cai(n)) {
    Rational sum = 0;
    for (Subset t : subsets_of(s)) {
      if (t.size() >= 2) sum += z.at(t);
    }
    m.set(s, sum);
  }
  return m;
}

std::size_t se_subspace_dimension(int n) {
  const auto keys = enumerate_family_indices(n);
  std::map<FamilyIndex, std::size_t> col;
  for (std::size_t i = 0; i < keys.size(); ++i) col[keys[i]] = i;
  auto add = [&](RationalVector& row, int node, Subset parents, int sign) {
    if (parents.empty()) return;
    row[col.at({node, parents})] += sign;
  };
  std::vector<RationalVector> rows;
  const Subset all = Subset::full(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (Subset z : subsets_of(all.without(a).without(b))) {
        RationalVector row(keys.size(), Rational(0));
        add(row, b, z.with(a), 1);
        add(row, a, z, 1);
        add(row, a, z.with(b), -1);
        add(row, b, z, -1);
        rows.push_back(std::move(row));
      }
    }
  }
  return keys.size() - matrix_rank(std::move(rows), keys.size());
}

SeFaceResult is_se_face(std::span<const Dag> graphs) {
  if (graphs.empty()) throw std::invalid_argument("empty graph set");
  const int n = graphs.front().size();
  if (n < 2 || n > 4) throw std::invalid_argument("SE face test supports 2 <= n <= 4");
  for (const Dag& g : graphs) {
    if (g.size() != n) throw std::invalid_argument("graphs over different ground sets");
  }
  const std::set<Dag> members(graphs.begin(), graphs.end());
  const auto cai = enumerate_cai(n);
  std::map<Subset, std::size_t> col;
  for (std::size_t i = 0; i < cai.size(); ++i) col[cai[i]] = i;
  const std::size_t nm = cai.size();
  const std::size_t u_col = nm;
  const std::size_t t_col = nm + 1;
  const std::size_t nv = nm + 2;

  // <phi, fam_G> as a linear form in m.
  auto score_row = [&](const Dag& g) {
    RationalVector row(nv, Rational(0));
    for (int a = 0; a < n; ++a) {
      const Subset pa = g.parents(a);
      if (pa.empty()) continue;
      row[col.at(pa.with(a))] += 1;
      if (pa.size() >= 2) row[col.at(pa)] -= 1;
    }
    return row;
  };

  LinearProgram lp;
  lp.num_vars = nv;
  lp.objective.assign(nv, Rational(0));
  lp.objective[t_col] = 1;
  for (const Dag& g : enumerate_dags(n)) {
    RationalVector row = score_row(g);
    row[u_col] = -1;
    if (members.count(g)) {
      lp.eq_rows.push_back(std::move(row));
      lp.eq_rhs.push_back(0);
    } else {
      row[t_col] = 1;
      lp.le_rows.push_back(std::move(row));
      lp.le_rhs.push_back(0);
    }
  }
  for (std::size_t j = 0; j < nm; ++j) {
    RationalVector up(nv, Rational(0)), down(nv, Rational(0));
    up[j] = 1;
    down[j] = -1;
    lp.le_rows.push_back(std::move(up));
    lp.le_rhs.push_back(1);
    lp.le_rows.push_back(std::move(down));
    lp.le_rhs.push_back(1);
  }
  RationalVector cap(nv, Rational(0));
  cap[t_col] = 1;
  lp.le_rows.push_back(std::move(cap));
  lp.le_rhs.push_back(1);

  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) throw std::logic_error("SE face LP did not reach an optimum");
  SeFaceResult out;
  out.margin = sol.value;
  out.se_face = sgn(sol.value) > 0;
  if (out.se_face) {
    CharVector m(n);
    for (std::size_t j = 0; j < nm; ++j) m.set(cai[j], sol.x[j]);
    out.witness = objective_from_setfn(m);
    out.bound = sol.x[u_col];
  }
  return out;
}

}  // namespace bnpoly
