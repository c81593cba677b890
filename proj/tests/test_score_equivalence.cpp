#include <doctest.h>

#include <map>

#include "bnpoly/encodings.hpp"
#include "bnpoly/score_equivalence.hpp"
#include "support.hpp"

using namespace bnpoly;

TEST_CASE("SE test on small objectives") {
  FamVector obj(3);
  obj.set({0, Subset(0b010)}, -1);
  CHECK_FALSE(is_se_objective(obj));
  CHECK(is_se_objective(FamVector(3)));
  // phi = -1 everywhere: every term of the defining equations balances.
  FamVector all(3);
  for (const auto& k : enumerate_family_indices(3)) all.set(k, -1);
  CHECK(is_se_objective(all));
}

TEST_CASE("set function parametrization round trip") {
  for (int i = 0; i < 120; ++i) {
    const int n = testing::uniform(2, 5);
    const CharVector m = testing::random_char(n);
    const FamVector obj = objective_from_setfn(m);
    CHECK(is_se_objective(obj));
    CHECK(setfn_from_objective(obj) == m);
    // phi(a|B) = m(aB) - m(B), by direct evaluation
    const auto k = enumerate_family_indices(n)[0];
    CHECK(obj.at(k) == m.at(k.parents.with(k.node)) - m.at(k.parents));
  }
}

TEST_CASE("non-SE objectives are rejected") {
  for (int i = 0; i < 100; ++i) {
    const int n = testing::uniform(2, 4);
    FamVector obj = objective_from_setfn(testing::random_char(n));
    const auto keys = enumerate_family_indices(n);
    // a single coordinate change breaks some defining equation
    obj.add(keys[static_cast<std::size_t>(testing::uniform(0, static_cast<int>(keys.size()) - 1))], 1);
    CHECK_FALSE(is_se_objective(obj));
    CHECK_THROWS_AS(setfn_from_objective(obj), NotScoreEquivalent);
    CHECK_THROWS_AS(char_objective(obj), NotScoreEquivalent);
  }
}

TEST_CASE("char objective reproduces values on every DAG") {
  for (int n = 2; n <= 4; ++n) {
    const auto dags = enumerate_dags(n);
    for (int t = 0; t < 50; ++t) {
      const FamVector obj = objective_from_setfn(testing::random_char(n));
      const CharVector z = char_objective(obj);
      for (const auto& g : dags) CHECK(scalar_product(obj, fam_vector(g)) == scalar_product(z, char_imset(g)));
    }
  }
}

TEST_CASE("SE objectives are constant on Markov classes") {
  for (int n = 2; n <= 4; ++n) {
    const auto dags = enumerate_dags(n);
    for (int t = 0; t < 10; ++t) {
      const FamVector obj = objective_from_setfn(testing::random_char(n));
      std::map<std::uint64_t, Rational> value;
      for (const auto& g : dags) {
        const Rational v = scalar_product(obj, fam_vector(g));
        auto [it, fresh] = value.emplace(char_imset_bits(g), v);
        CHECK(it->second == v);
      }
      CHECK(value.size() == enumerate_equivalence_classes(n).size());
    }
  }
}

TEST_CASE("Moebius pair are mutually inverse") {
  for (int i = 0; i < 150; ++i) {
    const int n = testing::uniform(2, 5);
    const CharVector m = testing::random_char(n);
    CHECK(moebius_up(moebius_down(m)) == m);
    CHECK(moebius_down(moebius_up(m)) == m);
  }
  // m = delta_ab over abc: z(ab) = 1, z(abc) = -1
  CharVector m(3);
  m.set(Subset(0b011), 1);
  const CharVector z = moebius_down(m);
  CHECK(z.at(Subset(0b011)) == 1);
  CHECK(z.at(Subset(0b111)) == -1);
  CHECK(z.support_size() == 2);
}

TEST_CASE("char objective equals the Moebius transform of the set function") {
  for (int i = 0; i < 100; ++i) {
    const int n = testing::uniform(2, 5);
    const CharVector m = testing::random_char(n);
    CHECK(char_objective(objective_from_setfn(m)) == moebius_down(m));
  }
}

TEST_CASE("dimension of the SE subspace") {
  for (int n = 2; n <= 4; ++n) CHECK(se_subspace_dimension(n) == (std::size_t{1} << n) - static_cast<std::size_t>(n) - 1);
}

TEST_CASE("SE faces at n = 3") {
  const auto dags = enumerate_dags(3);
  SUBCASE("the empty graph alone") {
    const std::vector<Dag> set{Dag::empty(3)};
    const auto r = is_se_face(set);
    CHECK(r.se_face);
    REQUIRE(r.witness);
    CHECK(is_se_objective(*r.witness));
    CHECK(sgn(r.margin) > 0);
    for (const auto& g : dags) {
      const Rational v = scalar_product(*r.witness, fam_vector(g));
      if (g == Dag::empty(3)) {
        CHECK(v == r.bound);
      } else {
        CHECK(v < r.bound);
      }
    }
  }
  SUBCASE("the full graphs") {
    const auto r = is_se_face(equivalence_class(Dag::full(3)));
    CHECK(r.se_face);
  }
  SUBCASE("half a class is not SE") {
    const auto cls = equivalence_class(Dag::full(3));
    const std::vector<Dag> half(cls.begin(), cls.begin() + 3);
    CHECK_FALSE(is_se_face(half).se_face);
  }
}
