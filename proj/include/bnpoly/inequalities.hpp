#pragma once

// Linear inequalities over family variables and characteristic imsets:
// non-negativity, modified convexity, generalized cluster inequalities, the
// n = 4 facet catalogs, the n = 5 counterexample constants, and LP export.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bnpoly/ground_model.hpp"
#include "bnpoly/polyhedra.hpp"

namespace bnpoly {

/// <objective, x> <= bound
template <class Vec>
struct LinearInequality {
  Vec objective;
  Rational bound;
  std::string label;

  static constexpr IndexFamily family = Vec::family;

  Rational value(const Vec& x) const { return scalar_product(objective, x); }
  Rational slack(const Vec& x) const { return bound - value(x); }
  bool satisfied_by(const Vec& x) const { return sgn(slack(x)) >= 0; }
  bool tight_at(const Vec& x) const { return sgn(slack(x)) == 0; }

  /// Integer coefficients with gcd 1; the bound is scaled alongside.
  LinearInequality normalized() const {
    const auto keys = dense_keys();
    DenseInequality d{objective.to_dense(keys), bound, label};
    d = d.normalized();
    return {Vec::from_dense(objective.ground_size(), keys, d.normal), d.bound, label};
  }

  DenseInequality to_dense() const { return {objective.to_dense(dense_keys()), bound, label}; }

  static LinearInequality from_dense(int n, const DenseInequality& d) {
    return {Vec::from_dense(n, keys_for(n), d.normal), d.bound, d.label};
  }

  static std::vector<typename Vec::key_type> keys_for(int n) {
    if constexpr (Vec::family == IndexFamily::fam) {
      return enumerate_family_indices(n);
    } else if constexpr (Vec::family == IndexFamily::cai) {
      return enumerate_cai(n);
    } else {
      return enumerate_power_set(n);
    }
  }

  /// Same objective and bound; labels are ignored.
  friend bool operator==(const LinearInequality& x, const LinearInequality& y) {
    return x.objective == y.objective && x.bound == y.bound;
  }

 private:
  std::vector<typename Vec::key_type> dense_keys() const { return keys_for(objective.ground_size()); }
};

using FamInequality = LinearInequality<FamVector>;
using CharInequality = LinearInequality<CharVector>;

/// -fam(a|B) <= 0 for every (a|B), in canonical order.
std::vector<FamInequality> nonneg_constraints(int n);

/// sum over nonempty B of fam(a|B) <= 1, one per node.
std::vector<FamInequality> modified_convexity(int n);

/// sum over a in C and B with |B n C| >= k of fam(a|B) <= |C| - k.
FamInequality cluster_fam(int n, Subset c, int k);

/// tau(S) = (-1)^{|S|-k-1} binom(|S|-2, |S|-k-1) for S within C, |S| >= k+1; bound |C| - k.
CharInequality cluster_char(int n, Subset c, int k);

/// phi(a|B) = sum over S with a in S, S\{a} within B, |S| >= 2, of z(S).
FamInequality fam_from_char_ineq(const CharInequality& ineq);

/// Inverse translation for SE objectives (throws NotScoreEquivalent otherwise).
CharInequality char_from_fam_ineq(const FamInequality& ineq);

/// Binomial coefficient with binom(n,0) = binom(n,n) = 1 for every integer n,
/// and binom(n,-1) = binom(n,n+1) = 0 for n >= 0. Other negative arguments throw.
Integer binomial(long n, long k);

/// (sum_{m=0}^{s} (-1)^m binom(k+s,k+m) binom(m+k-K,m), binom(s+K-1,K-1)).
/// Requires s >= 0 and k >= K >= 0.
std::pair<Integer, Integer> binomial_identity(long s, long k, long K);

// ---------------------------------------------------------------- permutations

/// perm[i] is the image of node i.
Subset permute(Subset s, const std::vector<int>& perm);
FamilyIndex permute(const FamilyIndex& idx, const std::vector<int>& perm);
FamVector permute(const FamVector& v, const std::vector<int>& perm);
CharVector permute(const CharVector& v, const std::vector<int>& perm);

/// Distinct images under all n! node permutations, sorted by dense coefficients.
std::vector<CharInequality> orbit(const CharInequality& ineq);
std::vector<FamInequality> orbit(const FamInequality& ineq);

// ---------------------------------------------------------------- catalogs

struct CertificateTerm {
  enum class Kind { nonneg, convexity } kind;
  FamilyIndex index;  ///< for nonneg
  int node = 0;       ///< for convexity
  Rational multiplier;
};

struct CatalogEntry {
  std::string type_id;
  /// Cluster description, facet-catalog label, or Sperner family.
  std::string description;
  CharInequality representative;
  std::optional<FamInequality> fam_representative;
  std::vector<CharInequality> orbit;
  std::size_t expected_orbit_size = 0;
  /// Conic combination of nonneg and convexity constraints equal to the fam form.
  std::vector<CertificateTerm> certificate;
};

/// The 37 SE facets of the n = 4 characteristic-imset polytope in 10 types.
std::vector<CatalogEntry> catalog_se_n4();

/// The 117 facets not containing the 1-imset, n = 4, in 20 types.
std::vector<CatalogEntry> catalog_specific_n4();

/// Sum of multiplier * constraint over the certificate terms.
FamInequality combine_certificate(int n, const std::vector<CertificateTerm>& terms);

struct CounterexampleConstants {
  CharInequality ineq20;
  FamInequality ineq21;
  FamVector obj_star;
  FamVector fam_dagger;
};

/// Over the ground set {a,b,c,d,e}.
CounterexampleConstants counterexample_constants();

/// Three fractional vertices of the n = 4 polyhedron cut out by the SE facets,
/// non-negativity and modified convexity.
std::vector<FamVector> fvp_star_witnesses();

// ---------------------------------------------------------------- LP export

/// CPLEX LP text: maximize `objective` over family variables x_a_B with
/// non-negativity, one convexity equation per node using x_a_ (the empty parent
/// set), and the given cuts.
std::string export_lp(const GroundSet& gs, const FamVector& objective, const std::vector<FamInequality>& cuts);

}  // namespace bnpoly
