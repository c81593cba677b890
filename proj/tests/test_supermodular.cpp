#include <doctest.h>

#include <set>

#include "bnpoly/encodings.hpp"
#include "bnpoly/score_equivalence.hpp"
#include "bnpoly/supermodular.hpp"
#include "support.hpp"

using namespace bnpoly;

TEST_CASE("elementary and pairwise supermodularity agree") {
  for (int i = 0; i < 150; ++i) {
    const int n = testing::uniform(2, 4);
    SetFunction m(n);
    for (Subset s : enumerate_power_set(n)) m.set(s, testing::uniform(-2, 3));
    CHECK(is_supermodular(m) == is_supermodular_pairwise(m));
    const SetFunction good = testing::random_supermodular(n);
    CHECK(is_supermodular(good));
    CHECK(is_supermodular_pairwise(good));
    CHECK(is_standardized(good));
  }
}

TEST_CASE("elementary triplet count") {
  // pairs times subsets of the rest
  for (int n = 2; n <= 5; ++n) {
    const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
    CHECK(elementary_triplets(n).size() == pairs * (std::size_t{1} << (n - 2)));
  }
}

TEST_CASE("delta") {
  SetFunction m = delta(3, Subset(0b011));
  CHECK(bnpoly::delta(m, 0, 1, Subset()) == 1);
  CHECK(bnpoly::delta(m, 0, 2, Subset()) == 0);
  CHECK_THROWS(bnpoly::delta(m, 0, 0, Subset()));
  CHECK_THROWS(bnpoly::delta(m, 0, 1, Subset(0b001)));
  CHECK(delta_sets(m, Subset(0b001), Subset(0b010), Subset()) == 1);
}

TEST_CASE("cluster functions are extreme") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& [c, k] : cluster_parameters(n)) {
      const auto m = cluster_supermodular(n, c, k);
      CHECK(is_standardized(m));
      CHECK(is_supermodular(m));
      CHECK(is_extreme(m));
    }
  }
  CHECK(cluster_parameters(5).size() == 49);
  CHECK(cluster_parameters(3).size() == 5);
}

TEST_CASE("sums of distinct extreme functions are not extreme") {
  const SetFunction m = cluster_supermodular(3, Subset(0b011), 1) + cluster_supermodular(3, Subset(0b110), 1);
  CHECK_FALSE(is_extreme(m));
  CHECK_THROWS(is_extreme(SetFunction(3)));
  CHECK_THROWS(is_extreme(delta(3, Subset(0b001))));
  SetFunction sub(3);
  sub.set(Subset(0b011), -1);
  CHECK_THROWS(is_extreme(sub));
}

TEST_CASE("SE inequalities from supermodular functions are valid and class-closed") {
  for (int t = 0; t < 120; ++t) {
    const int n = testing::uniform(2, 4);
    const auto dags = enumerate_dags(n);
    const SetFunction m = testing::random_supermodular(n);
    const FamVector obj = objective_from_setfn(to_char_vector(m));
    const Rational u = scalar_product(obj, fam_vector(Dag::full(n)));
    std::vector<Dag> tight;
    for (const auto& g : dags) {
      const Rational v = scalar_product(obj, fam_vector(g));
      CHECK(v <= u);
      if (v == u) tight.push_back(g);
    }
    CHECK(is_closed_under_equivalence(tight, dags));
    for (const auto& g : dags) {
      if (is_full_graph(g)) CHECK(std::find(tight.begin(), tight.end(), g) != tight.end());
    }
  }
}

TEST_CASE("core vertices are greedy marginals") {
  const SetFunction m = cluster_supermodular(3, Subset(0b111), 1);
  const auto v = core_vertices(m);
  // m(N) = 2, split 0/1/1 in some order
  CHECK(v.size() == 3);
  for (const auto& x : v) {
    CHECK(x[0] + x[1] + x[2] == 2);
    for (Subset s : enumerate_power_set(3)) {
      Rational sum = 0;
      for (int a : s.elements()) sum += x[static_cast<std::size_t>(a)];
      CHECK(sum >= m.at(s));
    }
  }
  CHECK_THROWS(core_vertices(SetFunction(3) - delta(3, Subset(0b011))));
}

TEST_CASE("duality with matroid rank functions") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& [c, k] : cluster_parameters(n)) {
      const SetFunction r = duality_transform(cluster_supermodular(n, c, k));
      // restricted to C, the dual is a rank function of a connected matroid
      CHECK(is_matroid_rank(r, c));
      CHECK(is_connected_matroid(r, c));
    }
  }
  SetFunction half(2);
  half.set(Subset(0b11), Rational(1, 2));
  CHECK_THROWS(is_matroid_rank(half, Subset(0b11)));
  // free matroid on two elements is disconnected
  SetFunction free(2);
  free.set(Subset(0b01), 1);
  free.set(Subset(0b10), 1);
  free.set(Subset(0b11), 2);
  CHECK(is_matroid_rank(free, Subset(0b11)));
  CHECK_FALSE(is_connected_matroid(free, Subset(0b11)));
}
