#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "bnpoly/cache.hpp"
#include "bnpoly/encodings.hpp"
#include "bnpoly/json_io.hpp"
#include "support.hpp"

using namespace bnpoly;

TEST_CASE("rationals and ground sets in JSON") {
  CHECK(rational_from_json(Json("3/6")) == Rational(1, 2));
  CHECK(rational_from_json(Json(-4)) == -4);
  CHECK(rational_to_json(Rational(-2, 4)) == Json("-1/2"));
  CHECK(rational_to_json(Rational(7)) == Json("7"));
  CHECK_THROWS(rational_from_json(Json("1/0")));
  CHECK_THROWS(rational_from_json(Json(1.5)));
  CHECK(ground_set_from_json(Json("abc")).size() == 3);
  CHECK(ground_set_from_json(Json::array({"x1", "x2"})).label(1) == "x2");
}

TEST_CASE("vectors, DAGs and inequalities round trip") {
  for (int n = 2; n <= 5; ++n) {
    const GroundSet gs = GroundSet::letters(n);
    for (int t = 0; t < 20; ++t) {
      const Dag g = testing::random_dag(n);
      CHECK(dag_from_json(gs, to_json(gs, g)) == g);
      const FamVector f = fam_vector(g);
      CHECK(fam_vector_from_json(gs, to_json(gs, f)) == f);
      const CharVector c = testing::random_char(n, -3, 3);
      CHECK(char_vector_from_json(gs, to_json(gs, c)) == c);
      Rational bound(t, 3);
      bound.canonicalize();
      const CharInequality ci{c, bound, "x"};
      const auto back = char_inequality_from_json(gs, to_json(gs, ci));
      CHECK(back.objective == ci.objective);
      CHECK(back.bound == ci.bound);
    }
  }
  const GroundSet gs = GroundSet::letters(3);
  CHECK_THROWS(dag_from_json(gs, Json::parse(R"({"a":"b","b":"a","c":""})")));
  CHECK_THROWS(fam_vector_from_json(gs, Json::parse(R"({"a|a": "1"})")));
}

TEST_CASE("dense representations round trip") {
  const GroundSet gs = GroundSet::letters(3);
  HRep h{IndexFamily::cai, 3, 4, {{{1, 0, -1, 2}, Rational(1, 2), ""}}, {{{0, 1, 1, 0}, 3}}};
  const HRep back = hrep_from_json(to_json(gs, h));
  CHECK(back.inequalities == h.inequalities);
  CHECK(back.equations == h.equations);
  VRep v{IndexFamily::cai, 3, 4, {{0, 0, 0, 0}, {1, Rational(1, 3), 0, 1}}, {}};
  CHECK(vrep_from_json(to_json(gs, v)).points == v.points);
  CHECK(coordinate_names(gs, IndexFamily::cai).size() == 4);
}

TEST_CASE("verification reports serialize") {
  VerificationReport r;
  r.pipeline = "demo";
  r.expect("one", "1", "1");
  r.skip("two", "2", "budget");
  const Json j = to_json(r);
  CHECK(j.at("pass") == true);
  CHECK(j.at("checks").size() == 2);
  CHECK(j.at("checks")[1].at("status") == "skipped");
  r.expect("three", "3", "4");
  CHECK(to_json(r).at("pass") == false);
}

TEST_CASE("cache stores and loads under the environment directory") {
  const auto dir = std::filesystem::temp_directory_path() / "bnpoly-cache-test";
  std::filesystem::remove_all(dir);
  ::unsetenv(kCacheEnv);
  CHECK_FALSE(cache_directory().has_value());
  cache_store("k", "input", "value");
  CHECK_FALSE(cache_load("k", "input").has_value());

  ::setenv(kCacheEnv, dir.c_str(), 1);
  CHECK_FALSE(cache_load("k", "input").has_value());
  cache_store("k", "input", "value\nwith lines\n");
  CHECK(cache_load("k", "input") == std::string("value\nwith lines\n"));
  CHECK_FALSE(cache_load("other", "input").has_value());
  CHECK_FALSE(cache_load("k", "input2").has_value());
  CHECK(content_hash("") == 0xcbf29ce484222325ULL);
  CHECK(content_hash("a") == 0xaf63dc4c8601ec8cULL);
  ::unsetenv(kCacheEnv);
  std::filesystem::remove_all(dir);
}
