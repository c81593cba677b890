#include "bnpoly/encodings.hpp"

#include <stdexcept>

namespace bnpoly {

FamVector fam_vector(const Dag& g) {
  FamVector out(g.size());
  for (int a = 0; a < g.size(); ++a) {
    if (!g.parents(a).empty()) out.set({a, g.parents(a)}, 1);
  }
  return out;
}

CharVector char_from_fam(const FamVector& fam) {
  const int n = fam.ground_size();
  CharVector out(n);
  // Each coordinate (a|B) contributes to every S = {a} u R with R <= B, |R| >= 1.
  for (const auto& [idx, value] : fam.nonzeros()) {
    for (Subset r : subsets_of(idx.parents)) {
      if (r.empty()) continue;
      out.add(r.with(idx.node), value);
    }
  }
  return out;
}

StandardImset standard_imset(const Dag& g) {
  const int n = g.size();
  StandardImset u(n);
  u.add(Subset::full(n), 1);
  u.add(Subset(), -1);
  for (int a = 0; a < n; ++a) {
    u.add(g.parents(a), 1);
    u.add(g.parents(a).with(a), -1);
  }
  return u;
}

CharVector char_from_standard(const StandardImset& u) {
  const int n = u.ground_size();
  CharVector out(n);
  for (Subset t : enumerate_cai(n)) {
    Rational sum = 0;
    for (const auto& [s, v] : u.nonzeros()) {
      if (t.is_subset_of(s)) sum += v;
    }
    out.set(t, 1 - sum);
  }
  return out;
}

CharVector char_imset(const Dag& g) {
  const int n = g.size();
  CharVector out(n);
  for (Subset s : enumerate_cai(n)) {
    for (int a : s.elements()) {
      if (s.without(a).is_subset_of(g.parents(a))) {
        out.set(s, 1);
        break;
      }
    }
  }
  return out;
}

std::uint64_t char_imset_bits(const Dag& g) {
  const int n = g.size();
  if (n > 6) throw std::invalid_argument("packed characteristic imsets need n <= 6");
  std::uint64_t bits = 0;
  for (int a = 0; a < n; ++a) {
    // All S = {a} u R with nonempty R within pa(a).
    for (Subset r : subsets_of(g.parents(a))) {
      if (!r.empty()) bits |= std::uint64_t{1} << r.with(a).mask();
    }
  }
  return bits;
}

CharVector one_imset(int n) {
  CharVector out(n);
  for (Subset s : enumerate_cai(n)) out.set(s, 1);
  return out;
}

CharVector zero_imset(int n) { return CharVector(n); }

}  // namespace bnpoly
