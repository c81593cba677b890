#pragma once

// Standardized supermodular set functions, their extreme rays, core
// polytopes, and the duality with matroid rank functions.

#include <vector>

#include "bnpoly/ground_model.hpp"
#include "bnpoly/polyhedra.hpp"

namespace bnpoly {

/// A set function that passed is_standardized and is_supermodular.
using SupermodularFn = SetFunction;

/// m(abZ) + m(Z) - m(aZ) - m(bZ). Throws if a == b or either lies in Z.
Rational delta(const SetFunction& m, int a, int b, Subset z);

/// m(A u B u Z) + m(Z) - m(A u Z) - m(B u Z) for pairwise disjoint A, B, Z.
Rational delta_sets(const SetFunction& m, Subset a, Subset b, Subset z);

/// m vanishes on sets of size <= 1.
bool is_standardized(const SetFunction& m);

/// All elementary delta(a, b | Z) >= 0.
bool is_supermodular(const SetFunction& m);

/// m(C u D) + m(C n D) >= m(C) + m(D) for all pairs; quadratic in 2^n.
bool is_supermodular_pairwise(const SetFunction& m);

struct Triplet {
  int a;
  int b;
  Subset z;
};

/// Elementary triplets (a < b, Z within N\{a,b}).
std::vector<Triplet> elementary_triplets(int n);

/// True iff the standardized m' with delta m'(t) = 0 on every triplet t tight
/// for m form a line. Throws std::invalid_argument for zero, non-standardized
/// or non-supermodular input.
bool is_extreme(const SetFunction& m);

/// Distinct marginal vectors v_a = m(pred u a) - m(pred) over all orders,
/// sorted; coordinates in node order.
std::vector<RationalVector> core_vertices(const SetFunction& m);

/// r(T) = m(N) - m(N\T).
SetFunction duality_transform(const SetFunction& m);

/// Rank axioms on the subsets of `ground`. Throws std::invalid_argument on
/// non-integer values.
bool is_matroid_rank(const SetFunction& r, Subset ground);

/// No proper nonempty S within ground with r(ground) = r(S) + r(ground\S).
bool is_connected_matroid(const SetFunction& r, Subset ground);

/// m(S) = max(0, |S n C| - k). Requires |C| >= 2 and 1 <= k <= |C|-1.
SupermodularFn cluster_supermodular(int n, Subset c, int k);

/// All (C, k) with |C| >= 2 and 1 <= k <= |C|-1, ordered by C then k.
std::vector<std::pair<Subset, int>> cluster_parameters(int n);

}  // namespace bnpoly
