#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "bnpoly/polyhedra.hpp"
#include "support.hpp"

using namespace bnpoly;

namespace {

RationalVector vec(std::initializer_list<int> xs) {
  RationalVector out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

VRep cube(int d) {
  VRep v{IndexFamily::power_set, 0, static_cast<std::size_t>(d), {}, {}};
  for (int m = 0; m < (1 << d); ++m) {
    RationalVector p;
    for (int i = 0; i < d; ++i) p.emplace_back((m >> i) & 1);
    v.points.push_back(std::move(p));
  }
  std::sort(v.points.begin(), v.points.end());
  return v;
}

using Key = std::pair<RationalVector, Rational>;

Key key(const DenseInequality& d) {
  auto n = d.normalized();
  return {n.normal, n.bound};
}

// Facets of a full-dimensional 3-polytope: planes through three points with all points on one side.
std::set<Key> brute_force_facets_3d(const std::vector<RationalVector>& pts) {
  std::set<Key> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        RationalVector u(3), w(3);
        for (int t = 0; t < 3; ++t) {
          u[t] = pts[j][t] - pts[i][t];
          w[t] = pts[k][t] - pts[i][t];
        }
        RationalVector nrm{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
        if (sgn(nrm[0]) == 0 && sgn(nrm[1]) == 0 && sgn(nrm[2]) == 0) continue;
        for (int flip = 0; flip < 2; ++flip) {
          const Rational b = nrm[0] * pts[i][0] + nrm[1] * pts[i][1] + nrm[2] * pts[i][2];
          bool valid = true;
          for (const auto& p : pts) valid = valid && nrm[0] * p[0] + nrm[1] * p[1] + nrm[2] * p[2] <= b;
          if (valid) out.insert(key({nrm, b, ""}));
          for (auto& x : nrm) x = -x;
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("linear algebra basics") {
  std::vector<RationalVector> rows{vec({1, 2, 3}), vec({2, 4, 6}), vec({0, 1, 1})};
  CHECK(matrix_rank(rows, 3) == 2);
  const auto ns = nullspace(rows, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& r : rows) CHECK(dot(r, ns[0]) == 0);
  const RationalVector half{Rational(1, 2), Rational(-3, 4), Rational(0)};
  const auto prim = primitive_integer(half);
  CHECK(prim == IntegerVector{2, -3, 0});
  CHECK(affine_rank(std::vector<RationalVector>{vec({0, 0}), vec({1, 1}), vec({2, 2})}) == 2);
  CHECK(centroid(std::vector<RationalVector>{vec({0, 0}), vec({1, 3})}) == RationalVector{Rational(1, 2), Rational(3, 2)});
  CHECK_THROWS(affine_rank(std::vector<RationalVector>{}));
}

TEST_CASE("cube facets and vertices") {
  for (int d = 1; d <= 5; ++d) {
    const VRep v = cube(d);
    const HRep h = facets_from_vertices(v);
    CHECK(h.inequalities.size() == static_cast<std::size_t>(2 * d));
    CHECK(h.equations.empty());
    for (const auto& f : h.inequalities) CHECK(is_facet(f, v));
    const VRep back = vertices_from_inequalities(h);
    CHECK(back.points == v.points);
  }
}

TEST_CASE("random 3-polytopes against brute force") {
  for (int t = 0; t < 60; ++t) {
    std::vector<RationalVector> pts;
    const int count = testing::uniform(5, 12);
    for (int i = 0; i < count; ++i) pts.push_back(vec({testing::uniform(-4, 4), testing::uniform(-4, 4), testing::uniform(-4, 4)}));
    if (affine_rank(pts) < 4) continue;
    const VRep v{IndexFamily::power_set, 0, 3, pts, {}};
    std::set<Key> got;
    for (const auto& f : facets_from_vertices(v).inequalities) got.insert(key(f));
    CHECK(got == brute_force_facets_3d(pts));
    // vertices come back as a subset of the input
    const VRep back = vertices_from_inequalities(facets_from_vertices(v));
    const std::set<RationalVector> input(pts.begin(), pts.end());
    for (const auto& p : back.points) CHECK(input.count(p) == 1);
  }
}

TEST_CASE("lower-dimensional point sets keep their affine hull") {
  // a square in the plane z = 1
  const VRep v{IndexFamily::power_set, 0, 3, {vec({0, 0, 1}), vec({0, 1, 1}), vec({1, 0, 1}), vec({1, 1, 1})}, {}};
  const HRep h = facets_from_vertices(v);
  CHECK(h.equations.size() == 1);
  CHECK(h.inequalities.size() == 4);
  const VRep back = vertices_from_inequalities(h);
  CHECK(back.points == v.points);
  const Face top = face_of(h.inequalities.front(), v);
  CHECK(top.dimension == 1);
  CHECK(top.tight.size() == 2);
}

TEST_CASE("options do not change results") {
  const VRep v = cube(4);
  DdOptions alg;
  alg.adjacency = AdjacencyTest::algebraic;
  DdOptions threads;
  threads.jobs = 4;
  const auto base = facets_from_vertices(v).inequalities;
  CHECK(facets_from_vertices(v, alg).inequalities == base);
  CHECK(facets_from_vertices(v, threads).inequalities == base);
  const HRep h = facets_from_vertices(v);
  CHECK(vertices_from_inequalities(h, threads).points == vertices_from_inequalities(h).points);
}

TEST_CASE("budgets, unbounded and infeasible inputs") {
  DdOptions tiny;
  tiny.budget.max_rays = 3;
  CHECK_THROWS_AS(facets_from_vertices(cube(4), tiny), BudgetExceeded);

  HRep orthant{IndexFamily::power_set, 0, 2, {{vec({-1, 0}), 0, ""}, {vec({0, -1}), 0, ""}}, {}};
  CHECK_THROWS_AS(vertices_from_inequalities(orthant), UnboundedError);
  const VRep rays = vertices_from_inequalities(orthant, {}, true);
  CHECK(rays.points.size() == 1);
  CHECK(rays.rays.size() == 2);

  HRep empty{IndexFamily::power_set, 0, 1, {{vec({1}), -1, ""}, {vec({-1}), -1, ""}}, {}};
  CHECK(vertices_from_inequalities(empty).points.empty());
}

TEST_CASE("cone extreme rays") {
  // x >= 0, y >= 0, x + y >= ... the positive quadrant in 2D
  const auto rays = cone_extreme_rays({{1, 0}, {0, 1}}, 2);
  CHECK(rays == std::vector<IntegerVector>{{0, 1}, {1, 0}});
  CHECK_THROWS(cone_extreme_rays({{1, 0}}, 2));
}

TEST_CASE("faces and facets") {
  const VRep v = cube(3);
  const DenseInequality facet{vec({1, 0, 0}), 1, ""};
  const DenseInequality edge{vec({1, 1, 0}), 2, ""};
  const DenseInequality loose{vec({1, 1, 1}), 5, ""};
  const DenseInequality bad{vec({1, 0, 0}), 0, ""};
  CHECK(face_of(facet, v).dimension == 2);
  CHECK(face_of(edge, v).dimension == 1);
  CHECK(face_of(loose, v).dimension == -1);
  CHECK(is_facet(facet, v));
  CHECK_FALSE(is_facet(edge, v));
  CHECK_THROWS_AS(face_of(bad, v), InvalidInequality);
}

TEST_CASE("H-representation text round trip") {
  HRep h = facets_from_vertices(VRep{IndexFamily::power_set, 0, 3, {vec({0, 0, 1}), vec({2, 0, 1}), vec({0, 3, 1})}, {}});
  h.n = 2;
  h.ambient = IndexFamily::cai;
  std::ostringstream out;
  write_hrep_text(out, h);
  std::istringstream in(out.str());
  const HRep back = read_hrep_text(in);
  CHECK(back.inequalities == h.inequalities);
  CHECK(back.equations == h.equations);
  CHECK(back.dimension == 3);
  std::istringstream broken("# hrep cai 2 3\n1 2\n");
  CHECK_THROWS(read_hrep_text(broken));
}

// ---------------------------------------------------------------- LP

namespace {
// Maximum of c.x over {A x <= b} in two variables by checking every intersection of two constraint lines.
std::optional<Rational> brute_force_2d(const RationalVector& c, const std::vector<RationalVector>& a, const RationalVector& b) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const Rational det = a[i][0] * a[j][1] - a[i][1] * a[j][0];
      if (sgn(det) == 0) continue;
      const RationalVector x{(b[i] * a[j][1] - a[i][1] * b[j]) / det, (a[i][0] * b[j] - b[i] * a[j][0]) / det};
      bool feasible = true;
      for (std::size_t k = 0; k < a.size(); ++k) feasible = feasible && dot(a[k], x) <= b[k];
      if (!feasible) continue;
      const Rational v = dot(c, x);
      if (!best || v > *best) best = v;
    }
  }
  return best;
}
}  // namespace

TEST_CASE("LP on random bounded 2D polygons") {
  for (int t = 0; t < 200; ++t) {
    std::vector<RationalVector> a{vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})};
    RationalVector b{Rational(testing::uniform(1, 9)), Rational(testing::uniform(1, 9)), Rational(testing::uniform(1, 9)),
                     Rational(testing::uniform(1, 9))};
    const int extra = testing::uniform(0, 4);
    for (int i = 0; i < extra; ++i) {
      a.push_back(vec({testing::uniform(-5, 5), testing::uniform(-5, 5)}));
      b.emplace_back(testing::uniform(-3, 8));
    }
    const RationalVector c = vec({testing::uniform(-6, 6), testing::uniform(-6, 6)});
    LinearProgram lp{2, c, a, b, {}, {}, {}};
    const auto sol = solve_lp(lp);
    const auto expected = brute_force_2d(c, a, b);
    if (!expected) {
      CHECK(sol.status == LpStatus::infeasible);
      continue;
    }
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.value == *expected);
    CHECK(check_optimality_certificate(lp, sol));
  }
}

TEST_CASE("LP status detection and equations") {
  LinearProgram unbounded{2, vec({1, 1}), {vec({-1, 0})}, {Rational(0)}, {}, {}, {}};
  CHECK(solve_lp(unbounded).status == LpStatus::unbounded);
  LinearProgram infeasible{1, vec({1}), {vec({1}), vec({-1})}, {Rational(-1), Rational(-1)}, {}, {}, {}};
  CHECK(solve_lp(infeasible).status == LpStatus::infeasible);
  // max x + 2y with x + y = 3, x, y >= 0, y <= 2
  LinearProgram eq{2, vec({1, 2}), {vec({0, 1})}, {Rational(2)}, {vec({1, 1})}, {Rational(3)}, {true, true}};
  const auto sol = solve_lp(eq);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.value == 5);
  CHECK(sol.x == vec({1, 2}));
  CHECK(check_optimality_certificate(eq, sol));
  // redundant equations are tolerated
  eq.eq_rows.push_back(vec({2, 2}));
  eq.eq_rhs.emplace_back(6);
  CHECK(solve_lp(eq).value == 5);

  HRep h = facets_from_vertices(cube(3));
  const auto r = lp_maximize(vec({1, -1, 2}), h);
  CHECK(r.optimum == 3);
  HRep open{IndexFamily::power_set, 0, 1, {{vec({-1}), 0, ""}}, {}};
  CHECK_THROWS_AS(lp_maximize(vec({1}), open), UnboundedError);
  HRep none{IndexFamily::power_set, 0, 1, {{vec({1}), -1, ""}, {vec({-1}), -1, ""}}, {}};
  CHECK_THROWS_AS(lp_maximize(vec({1}), none), InfeasibleError);
}

TEST_CASE("LP optimum equals the best vertex of random polytopes") {
  for (int t = 0; t < 40; ++t) {
    const int d = testing::uniform(2, 5);
    std::vector<RationalVector> pts;
    for (int i = 0; i < d + 4; ++i) {
      RationalVector p;
      for (int j = 0; j < d; ++j) p.emplace_back(testing::uniform(-5, 5));
      pts.push_back(std::move(p));
    }
    const VRep v{IndexFamily::power_set, 0, static_cast<std::size_t>(d), pts, {}};
    const HRep h = facets_from_vertices(v);
    RationalVector c;
    for (int j = 0; j < d; ++j) c.emplace_back(testing::uniform(-4, 4));
    Rational best = dot(c, pts[0]);
    for (const auto& p : pts) best = std::max(best, dot(c, p));
    CHECK(lp_maximize(c, h).optimum == best);
  }
}
