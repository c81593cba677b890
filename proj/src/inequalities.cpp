#include "bnpoly/inequalities.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "bnpoly/score_equivalence.hpp"

namespace bnpoly {

std::vector<FamInequality> nonneg_constraints(int n) {
  const GroundSet gs = GroundSet::letters(n);
  std::vector<FamInequality> out;
  for (const auto& idx : enumerate_family_indices(n)) {
    FamVector v(n);
    v.set(idx, -1);
    out.push_back({std::move(v), 0, "nonneg " + format_family_index(gs, idx)});
  }
  return out;
}

std::vector<FamInequality> modified_convexity(int n) {
  const GroundSet gs = GroundSet::letters(n);
  std::vector<FamInequality> out;
  for (int a = 0; a < n; ++a) {
    FamVector v(n);
    for (Subset b : subsets_of(Subset::full(n).without(a))) {
      if (!b.empty()) v.set({a, b}, 1);
    }
    out.push_back({std::move(v), 1, "convexity " + gs.label(a)});
  }
  return out;
}

namespace {
void check_cluster(int n, Subset c, int k) {
  if (!c.is_subset_of(Subset::full(n)) || c.size() < 2) throw std::invalid_argument("cluster needs at least two nodes");
  if (k < 1 || k > c.size() - 1) throw std::invalid_argument("cluster level out of range");
}

std::string cluster_label(int n, Subset c, int k) {
  return "cluster " + GroundSet::letters(n).format(c) + " k=" + std::to_string(k);
}
}  // namespace

FamInequality cluster_fam(int n, Subset c, int k) {
  check_cluster(n, c, k);
  FamVector v(n);
  for (const auto& idx : enumerate_family_indices(n)) {
    if (c.contains(idx.node) && (idx.parents & c).size() >= k) v.set(idx, 1);
  }
  return {std::move(v), c.size() - k, cluster_label(n, c, k)};
}

CharInequality cluster_char(int n, Subset c, int k) {
  check_cluster(n, c, k);
  CharVector v(n);
  for (Subset s : subsets_of(c)) {
    const long size = s.size();
    if (size < 2 || size < k + 1) continue;
    Integer coef = binomial(size - 2, size - k - 1);
    if ((size - k - 1) % 2 != 0) coef = -coef;
    v.set(s, Rational(coef));
  }
  return {std::move(v), c.size() - k, cluster_label(n, c, k)};
}

FamInequality fam_from_char_ineq(const CharInequality& ineq) {
  const int n = ineq.objective.ground_size();
  FamVector v(n);
  for (const auto& idx : enumerate_family_indices(n)) {
    Rational sum = 0;
    for (Subset r : subsets_of(idx.parents)) {
      if (!r.empty()) sum += ineq.objective.at(r.with(idx.node));
    }
    v.set(idx, sum);
  }
  return {std::move(v), ineq.bound, ineq.label};
}

CharInequality char_from_fam_ineq(const FamInequality& ineq) {
  return {char_objective(ineq.objective), ineq.bound, ineq.label};
}

Integer binomial(long n, long k) {
  if (k == 0 || k == n) return 1;
  if (n >= 0) {
    if (k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
  }
  throw std::invalid_argument("binomial coefficient outside the supported conventions");
}

std::pair<Integer, Integer> binomial_identity(long s, long k, long K) {
  if (s < 0 || K < 0 || k < K) throw std::invalid_argument("identity needs s >= 0 and k >= K >= 0");
  Integer lhs = 0;
  for (long m = 0; m <= s; ++m) {
    const Integer term = binomial(k + s, k + m) * binomial(m + k - K, m);
    if (m % 2 == 0) {
      lhs += term;
    } else {
      lhs -= term;
    }
  }
  return {lhs, binomial(s + K - 1, K - 1)};
}

Subset permute(Subset s, const std::vector<int>& perm) {
  Subset out;
  for (int a : s.elements()) out = out.with(perm.at(static_cast<std::size_t>(a)));
  return out;
}

FamilyIndex permute(const FamilyIndex& idx, const std::vector<int>& perm) {
  return {perm.at(static_cast<std::size_t>(idx.node)), permute(idx.parents, perm)};
}

FamVector permute(const FamVector& v, const std::vector<int>& perm) {
  FamVector out(v.ground_size());
  for (const auto& [k, q] : v.nonzeros()) out.set(permute(k, perm), q);
  return out;
}

CharVector permute(const CharVector& v, const std::vector<int>& perm) {
  CharVector out(v.ground_size());
  for (const auto& [k, q] : v.nonzeros()) out.set(permute(k, perm), q);
  return out;
}

namespace {
template <class Ineq>
std::vector<Ineq> orbit_of(const Ineq& ineq) {
  const int n = ineq.objective.ground_size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<RationalVector, Ineq>> seen;
  std::set<std::pair<RationalVector, Rational>> keys;
  do {
    Ineq img{permute(ineq.objective, perm), ineq.bound, ineq.label};
    auto dense = img.to_dense();
    if (keys.insert({dense.normal, dense.bound}).second) seen.emplace_back(std::move(dense.normal), std::move(img));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(seen.begin(), seen.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Ineq> out;
  for (auto& [key, img] : seen) out.push_back(std::move(img));
  return out;
}
}  // namespace

std::vector<CharInequality> orbit(const CharInequality& ineq) { return orbit_of(ineq); }
std::vector<FamInequality> orbit(const FamInequality& ineq) { return orbit_of(ineq); }

FamInequality combine_certificate(int n, const std::vector<CertificateTerm>& terms) {
  const auto convexity = modified_convexity(n);
  FamInequality sum{FamVector(n), 0, "certificate"};
  for (const auto& t : terms) {
    if (sgn(t.multiplier) < 0) throw std::invalid_argument("certificate multipliers must be non-negative");
    if (t.kind == CertificateTerm::Kind::nonneg) {
      sum.objective.add(t.index, -t.multiplier);
    } else {
      sum.objective += t.multiplier * convexity.at(static_cast<std::size_t>(t.node)).objective;
      sum.bound += t.multiplier;
    }
  }
  return sum;
}

std::string export_lp(const GroundSet& gs, const FamVector& objective, const std::vector<FamInequality>& cuts) {
  const int n = gs.size();
  if (objective.ground_size() != n) throw std::invalid_argument("objective over a different ground set");
  auto var = [&](int node, Subset parents) {
    std::string name = "x_" + gs.label(node) + "_";
    for (int p : parents.elements()) name += gs.label(p);
    return name;
  };
  // LP text takes decimal coefficients, so rows are scaled to coprime integers.
  auto write_terms = [&](std::ostringstream& out, const std::vector<std::pair<Integer, std::string>>& terms) {
    std::size_t on_line = 0;
    bool first = true;
    for (const auto& [c, name] : terms) {
      if (sgn(c) == 0) continue;
      if (on_line == 8) {
        out << "\n   ";
        on_line = 0;
      }
      if (sgn(c) < 0) {
        out << (first ? "-" : " -");
      } else if (!first) {
        out << " +";
      }
      out << ' ' << Integer(abs(c)).get_str() << ' ' << name;
      first = false;
      ++on_line;
    }
    if (first) out << " 0 " << var(0, Subset());
  };
  const auto keys = enumerate_family_indices(n);
  auto integer_terms = [&](const FamVector& v, Rational& bound) {
    DenseInequality d{v.to_dense(keys), bound, ""};
    d = d.normalized();
    bound = d.bound;
    std::vector<std::pair<Integer, std::string>> terms;
    for (std::size_t i = 0; i < keys.size(); ++i) terms.emplace_back(d.normal[i].get_num(), var(keys[i].node, keys[i].parents));
    return terms;
  };

  std::ostringstream out;
  Rational obj_scale_probe = 0;
  const auto obj_terms = integer_terms(objective, obj_scale_probe);
  Rational scale = 1;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const Rational q = objective.at(keys[i]);
    if (sgn(q) != 0) {
      scale = Rational(obj_terms[i].first) / q;
      break;
    }
  }
  out << "\\ Family-variable relaxation over nodes";
  for (const auto& l : gs.labels()) out << ' ' << l;
  out << "\n\\ Objective scaled by " << format_rational(scale) << "\n";
  out << "Maximize\n obj:";
  write_terms(out, obj_terms);
  out << "\nSubject To\n";
  for (int a = 0; a < n; ++a) {
    std::vector<std::pair<Integer, std::string>> terms{{Integer(1), var(a, Subset())}};
    for (Subset b : subsets_of(Subset::full(n).without(a))) {
      if (!b.empty()) terms.emplace_back(Integer(1), var(a, b));
    }
    out << " conv_" << gs.label(a) << ":";
    write_terms(out, terms);
    out << " = 1\n";
  }
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i].objective.ground_size() != n) throw std::invalid_argument("cut over a different ground set");
    Rational bound = cuts[i].bound;
    const auto terms = integer_terms(cuts[i].objective, bound);
    out << " cut_" << (i + 1) << ":";
    write_terms(out, terms);
    out << " <= " << bound.get_num().get_str() << "\n";
  }
  out << "Bounds\n";
  for (int a = 0; a < n; ++a) out << " " << var(a, Subset()) << " >= 0\n";
  for (const auto& k : keys) out << " " << var(k.node, k.parents) << " >= 0\n";
  out << "End\n";
  return out.str();
}

}  // namespace bnpoly
