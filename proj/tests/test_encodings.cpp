#include <doctest.h>

#include <set>

#include "bnpoly/encodings.hpp"
#include "support.hpp"

using namespace bnpoly;

namespace {
// c_G(S) = 1 iff some node of S has the rest of S among its parents.
CharVector char_by_definition(const Dag& g) {
  CharVector c(g.size());
  for (Subset s : enumerate_cai(g.size())) {
    for (int a : s.elements()) {
      if (s.without(a).is_subset_of(g.parents(a))) c.set(s, 1);
    }
  }
  return c;
}
}  // namespace

TEST_CASE("family-variable vectors mark each nonempty parent set") {
  const Dag g(3, {Subset(), Subset(0b001), Subset(0b011)});
  const FamVector f = fam_vector(g);
  CHECK(f.support_size() == 2);
  CHECK(f.at({1, Subset(0b001)}) == 1);
  CHECK(f.at({2, Subset(0b011)}) == 1);
  CHECK(fam_vector(Dag::empty(4)).is_zero());
}

TEST_CASE("characteristic imsets agree across the three routes") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : enumerate_dags(n)) {
      const CharVector c = char_by_definition(g);
      CHECK(char_imset(g) == c);
      CHECK(char_from_fam(fam_vector(g)) == c);
      CHECK(char_from_standard(standard_imset(g)) == c);
    }
  }
}

TEST_CASE("characteristic imsets are class invariants") {
  for (const auto& g : enumerate_dags(4)) {
    for (const auto& h : covered_arc_neighbors(g)) CHECK(char_imset(g) == char_imset(h));
  }
}

TEST_CASE("special imsets") {
  CHECK(char_imset(Dag::empty(4)) == zero_imset(4));
  CHECK(char_imset(Dag::full(4)) == one_imset(4));
  CHECK(one_imset(3).support_size() == 4);
  // standard imset of the empty graph over {a,b}: delta_N - delta_a - delta_b + delta_empty
  const StandardImset u = standard_imset(Dag::empty(2));
  CHECK(u.at(Subset(0b11)) == 1);
  CHECK(u.at(Subset(0b01)) == -1);
  CHECK(u.at(Subset(0b10)) == -1);
  CHECK(u.at(Subset()) == 1);
}

TEST_CASE("bit encoding distinguishes classes") {
  std::set<std::uint64_t> bits;
  for (const auto& c : enumerate_equivalence_classes(4)) bits.insert(char_imset_bits(c.representative));
  CHECK(bits.size() == 185);
}
