#pragma once

// The three vector encodings of a DAG and the maps between them.

#include <cstdint>

#include "bnpoly/dags.hpp"
#include "bnpoly/ground_model.hpp"

namespace bnpoly {

/// Integer-valued for DAG inputs; kept rational for uniform arithmetic.
using StandardImset = SetFunction;

/// 0/1 vector with a one at (a|pa(a)) for every node with a nonempty parent set.
FamVector fam_vector(const Dag& g);

/// c(S) = sum over a in S, and B with S\{a} <= B <= N\{a}, of fam(a|B).
/// Linear on all of the family space, not only on DAG codes.
CharVector char_from_fam(const FamVector& fam);

/// u_G = delta_N - delta_{} + sum_a (delta_{pa(a)} - delta_{{a} u pa(a)}).
StandardImset standard_imset(const Dag& g);

/// c(T) = 1 - sum over S >= T of u(S), for |T| >= 2.
CharVector char_from_standard(const StandardImset& u);

/// Characteristic imset of a DAG: c(S) = 1 iff some a in S has S\{a} within pa(a).
CharVector char_imset(const Dag& g);

/// The characteristic imset packed as a bitmask over subset masks (bit S set iff
/// c(S) = 1). Requires n <= 6. Equal keys iff Markov equivalent.
std::uint64_t char_imset_bits(const Dag& g);

/// All-ones and all-zeros characteristic vectors.
CharVector one_imset(int n);
CharVector zero_imset(int n);

}  // namespace bnpoly
