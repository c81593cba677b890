#pragma once

// Score equivalent (SE) objectives over family variables: the linear
// characterization, the parametrization by set functions, the translation to
// characteristic-imset objectives, the Moebius pair, and an exact LP test for
// SE faces.

#include <optional>
#include <span>
#include <stdexcept>

#include "bnpoly/dags.hpp"
#include "bnpoly/ground_model.hpp"

namespace bnpoly {

/// A family-variable objective that passed is_se_objective.
using SeObjective = FamVector;

class NotScoreEquivalent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// phi(b|aZ) + phi(a|Z) = phi(a|bZ) + phi(b|Z) for all Z and distinct a, b outside Z.
bool is_se_objective(const FamVector& obj);

/// phi(a|B) = m(aB) - m(B).
SeObjective objective_from_setfn(const CharVector& m);

/// The unique m with objective_from_setfn(m) == obj. Throws NotScoreEquivalent.
CharVector setfn_from_objective(const FamVector& obj);

/// z with <obj, fam> = <z, char_from_fam(fam)> for every fam:
///   z(T) = sum over nonempty K within T\{b} of (-1)^{|T\{b}|-|K|} phi(b|K),
/// evaluated for every b in T. Throws NotScoreEquivalent for non-SE input and
/// std::logic_error if the choices of b disagree.
CharVector char_objective(const FamVector& obj);

/// z(T) = sum over L within T, |L| >= 2, of (-1)^{|T\L|} m(L).
CharVector moebius_down(const CharVector& m);
/// m(S) = sum over T within S, |T| >= 2, of z(T).
CharVector moebius_up(const CharVector& z);

/// Dimension of the solution space of the SE equations, by exact rank.
std::size_t se_subspace_dimension(int n);

struct SeFaceResult {
  bool se_face = false;
  /// On success: an SE objective equal to `bound` on the set and below it elsewhere.
  std::optional<SeObjective> witness;
  Rational bound;
  /// Optimal margin of the LP (positive iff se_face).
  Rational margin;
};

/// Decides whether the DAG-codes of `graphs` form an SE face of the
/// family-variable polytope: maximize t subject to <phi,fam_G> = u on the set,
/// <phi,fam_H> <= u - t off it, |m(S)| <= 1, t <= 1. Requires 2 <= n <= 4.
SeFaceResult is_se_face(std::span<const Dag> graphs);

}  // namespace bnpoly
