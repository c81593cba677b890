#include <doctest.h>

#include <set>

#include "bnpoly/dags.hpp"
#include "bnpoly/encodings.hpp"
#include "support.hpp"

using namespace bnpoly;

TEST_CASE("DAG enumeration matches brute force over parent maps") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<Subset>> expected;
    for (const auto& m : testing::all_parent_maps(n)) {
      if (testing::acyclic_by_peeling(m)) expected.insert(m);
    }
    const auto dags = enumerate_dags(n);
    std::set<std::vector<Subset>> got;
    for (const auto& d : dags) got.insert(d.parent_map());
    CHECK(got.size() == dags.size());
    CHECK(got == expected);
  }
  CHECK(enumerate_dags(2).size() == 3);
  CHECK(enumerate_dags(3).size() == 25);
  CHECK(enumerate_dags(4).size() == 543);
}

TEST_CASE("acyclicity test agrees with peeling") {
  for (const auto& m : testing::all_parent_maps(3)) CHECK(is_acyclic(m, 3) == testing::acyclic_by_peeling(m));
  CHECK_THROWS(Dag(2, {Subset(0b10), Subset(0b01)}));
  CHECK_THROWS(Dag(2, {Subset(0b01), Subset()}));
}

TEST_CASE("enumeration is deterministic") {
  CHECK(enumerate_dags(4) == enumerate_dags(4));
}

TEST_CASE("immoralities of small graphs") {
  // a -> c <- b
  const Dag v(3, {Subset(), Subset(), Subset(0b011)});
  const auto im = immoralities(v);
  REQUIRE(im.size() == 1);
  CHECK(im[0].pair == Subset(0b011));
  CHECK(im[0].collider == 2);
  // shielded by a -> b
  const Dag shielded(3, {Subset(), Subset(0b001), Subset(0b011)});
  CHECK(immoralities(shielded).empty());
}

TEST_CASE("Markov equivalence against the characteristic imset") {
  const auto dags = enumerate_dags(4);
  for (int i = 0; i < 300; ++i) {
    const auto& g = dags[static_cast<std::size_t>(testing::uniform(0, 542))];
    const auto& h = dags[static_cast<std::size_t>(testing::uniform(0, 542))];
    CHECK(markov_equivalent(g, h) == (char_imset(g) == char_imset(h)));
  }
}

TEST_CASE("covered arc reversals stay in the class") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : enumerate_dags(n)) {
      for (const auto& h : covered_arc_neighbors(g)) {
        CHECK(is_acyclic(h.parent_map(), n));
        CHECK(markov_equivalent(g, h));
      }
    }
  }
}

TEST_CASE("equivalence classes partition the DAGs") {
  const std::size_t expected_classes[] = {0, 1, 2, 11, 185};
  for (int n = 1; n <= 4; ++n) {
    const auto classes = enumerate_equivalence_classes(n);
    CHECK(classes.size() == expected_classes[n]);
    std::size_t total = 0;
    for (const auto& c : classes) {
      const auto members = equivalence_class(c.representative);
      CHECK(members.size() == c.size);
      CHECK(std::is_sorted(members.begin(), members.end()));
      CHECK(members.front() == c.representative);
      for (const auto& m : members) CHECK(markov_equivalent(m, c.representative));
      total += c.size;
    }
    CHECK(total == enumerate_dags(n).size());
  }
}

TEST_CASE("full graphs form one class") {
  for (int n = 2; n <= 4; ++n) {
    std::size_t full = 0;
    for (const auto& g : enumerate_dags(n)) full += is_full_graph(g);
    std::size_t factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= static_cast<std::size_t>(i);
    CHECK(full == factorial);
    CHECK(equivalence_class(Dag::full(n)).size() == factorial);
  }
}

TEST_CASE("closure under equivalence") {
  const auto dags = enumerate_dags(3);
  const auto cls = equivalence_class(Dag::full(3));
  CHECK(is_closed_under_equivalence(cls, dags));
  std::vector<Dag> partial(cls.begin(), cls.begin() + 1);
  CHECK_FALSE(is_closed_under_equivalence(partial, dags));
}
