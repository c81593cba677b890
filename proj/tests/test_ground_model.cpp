#include <doctest.h>

#include "bnpoly/ground_model.hpp"
#include "support.hpp"

using namespace bnpoly;

TEST_CASE("index family sizes follow the closed forms") {
  for (int n = 1; n <= 6; ++n) {
    const std::size_t fam = static_cast<std::size_t>(n) * ((std::size_t{1} << (n - 1)) - 1);
    const std::size_t cai = (std::size_t{1} << n) - static_cast<std::size_t>(n) - 1;
    CHECK(enumerate_family_indices(n).size() == fam);
    CHECK(enumerate_cai(n).size() == cai);
    CHECK(enumerate_power_set(n).size() == (std::size_t{1} << n));
  }
  CHECK(enumerate_family_indices(3).size() == 9);
  CHECK(enumerate_family_indices(4).size() == 28);
  CHECK(enumerate_cai(5).size() == 26);
}

TEST_CASE("canonical orders") {
  const auto fam = enumerate_family_indices(3);
  CHECK(std::is_sorted(fam.begin(), fam.end()));
  const auto cai = enumerate_cai(4);
  CHECK(std::is_sorted(cai.begin(), cai.end(), BySizeThenMask{}));
  CHECK(cai.front() == Subset(0b0011));
  CHECK(cai.back() == Subset(0b1111));
}

TEST_CASE("labels format and parse") {
  const GroundSet gs = GroundSet::letters(4);
  CHECK(gs.format(Subset(0b0101)) == "ac");
  CHECK(gs.format(Subset()) == "");
  CHECK(gs.parse_subset("db") == Subset(0b1010));
  CHECK(format_family_index(gs, {0, Subset(0b0110)}) == "a|bc");
  CHECK(parse_family_index(gs, "c|abd") == FamilyIndex{2, Subset(0b1011)});
  CHECK_THROWS_AS(gs.parse_subset("az"), std::invalid_argument);

  const GroundSet named({"x2", "x1"});
  CHECK(named.label(0) == "x1");
  CHECK(named.format(named.full()) == "x1,x2");
  CHECK(named.parse_subset("x2,x1") == named.full());
  for (const auto& k : enumerate_family_indices(named)) CHECK(parse_family_index(named, format_family_index(named, k)) == k);
}

TEST_CASE("rationals round trip through p/q strings") {
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK(format_rational(Rational(-4, 2)) == "-2");
  CHECK(parse_rational("10/-4") == Rational(-5, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("0.5"));
  for (int i = 0; i < 200; ++i) {
    Rational q(testing::uniform(-1000, 1000), testing::uniform(1, 97));
    q.canonicalize();
    CHECK(parse_rational(format_rational(q)) == q);
  }
}

TEST_CASE("sparse vectors read zero outside their index family") {
  FamVector f(3);
  CHECK(f.at({1, Subset()}) == 0);
  f.set({0, Subset(0b010)}, 2);
  CHECK(f.at({0, Subset(0b010)}) == 2);
  f.set({0, Subset()}, 0);  // zero outside the family is accepted
  CHECK_THROWS_AS(f.set({0, Subset()}, 1), std::invalid_argument);
  CHECK_THROWS_AS(f.set({0, Subset(0b001)}, 1), std::invalid_argument);

  CharVector c(3);
  CHECK(c.at(Subset(0b001)) == 0);
  CHECK_THROWS(c.set(Subset(0b001), 1));
  c.set(Subset(0b011), 1);
  c.add(Subset(0b011), -1);
  CHECK(c.is_zero());

  CHECK_THROWS(FamVector(3) += FamVector(4));
}

TEST_CASE("scalar products and dense conversion") {
  const auto keys = enumerate_cai(4);
  CharVector x(4), y(4);
  Rational expected = 0;
  for (Subset s : keys) {
    const int a = testing::uniform(-3, 3), b = testing::uniform(-3, 3);
    x.set(s, a);
    y.set(s, b);
    expected += a * b;
  }
  CHECK(scalar_product(x, y) == expected);
  CHECK(CharVector::from_dense(4, keys, x.to_dense(keys)) == x);

  TaggedVector t{IndexFamily::cai, 4, x.to_dense(keys)};
  TaggedVector u{IndexFamily::cai, 4, y.to_dense(keys)};
  CHECK(scalar_product(t, u) == expected);
  u.family = IndexFamily::fam;
  CHECK_THROWS(scalar_product(t, u));
}

TEST_CASE("set function conversions") {
  SetFunction m(3);
  m.set(Subset(0b011), 2);
  m.set(Subset(0b001), 5);
  const CharVector c = to_char_vector(m);
  CHECK(c.support_size() == 1);
  CHECK(to_set_function(c).at(Subset(0b011)) == 2);
  CHECK(to_set_function(c).at(Subset(0b001)) == 0);
}
