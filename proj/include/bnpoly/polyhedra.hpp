#pragma once

// Exact rational polyhedral computations over dense coordinates: linear
// algebra, affine rank and faces, the double description method in both
// directions, and a rational simplex solver.
//
// Coordinates follow the canonical key order of the ambient index family
// (enumerate_family_indices or enumerate_cai); the sparse inequality types in
// inequalities.hpp convert to and from these dense forms.

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bnpoly/ground_model.hpp"

namespace bnpoly {

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

// ---------------------------------------------------------------- linear algebra

Rational dot(std::span<const Rational> x, std::span<const Rational> y);

/// Reduced row echelon form in place (zero rows dropped); returns the pivot columns.
std::vector<std::size_t> row_reduce(std::vector<RationalVector>& rows, std::size_t cols);

std::size_t matrix_rank(std::vector<RationalVector> rows, std::size_t cols);

/// Basis of {x : rows * x = 0}, one vector per free column of the echelon form.
std::vector<RationalVector> nullspace(std::vector<RationalVector> rows, std::size_t cols);

/// Positive multiple with coprime integer entries (zero stays zero).
IntegerVector primitive_integer(std::span<const Rational> v);
RationalVector to_rational(std::span<const Integer> v);

/// Rank of {p - p0} plus one. Throws std::invalid_argument on empty input.
std::size_t affine_rank(std::span<const RationalVector> points);

/// Uniform average. Throws std::invalid_argument on empty input.
RationalVector centroid(std::span<const RationalVector> points);

// ---------------------------------------------------------------- representations

/// normal . x <= bound
struct DenseInequality {
  RationalVector normal;
  Rational bound;
  std::string label;

  Rational slack(std::span<const Rational> x) const { return bound - dot(normal, x); }
  /// Integer coefficients with gcd 1, bound scaled alongside.
  DenseInequality normalized() const;

  friend bool operator==(const DenseInequality& a, const DenseInequality& b) {
    return a.normal == b.normal && a.bound == b.bound;
  }
};

/// normal . x = rhs
struct DenseEquation {
  RationalVector normal;
  Rational rhs;

  friend bool operator==(const DenseEquation&, const DenseEquation&) = default;
};

struct VRep {
  IndexFamily ambient = IndexFamily::fam;
  int n = 0;
  std::size_t dimension = 0;
  std::vector<RationalVector> points;
  /// Only filled by vertices_from_inequalities with an unboundedness waiver.
  std::vector<RationalVector> rays;
};

struct HRep {
  IndexFamily ambient = IndexFamily::fam;
  int n = 0;
  std::size_t dimension = 0;
  std::vector<DenseInequality> inequalities;
  std::vector<DenseEquation> equations;
};

/// Ambient coordinate count for the index family over n nodes.
std::size_t ambient_dimension(IndexFamily family, int n);

// ---------------------------------------------------------------- faces

class InvalidInequality : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Face {
  std::vector<std::size_t> tight;  ///< indices into the point list
  long dimension = -1;             ///< -1 for the empty face
};

/// Throws InvalidInequality if some point violates the inequality.
Face face_of(const DenseInequality& ineq, std::span<const RationalVector> points);
inline Face face_of(const DenseInequality& ineq, const VRep& v) { return face_of(ineq, v.points); }

bool is_facet(const DenseInequality& ineq, std::span<const RationalVector> points);
inline bool is_facet(const DenseInequality& ineq, const VRep& v) { return is_facet(ineq, v.points); }

// ---------------------------------------------------------------- double description

class BudgetExceeded : public std::runtime_error {
 public:
  enum class Resource { time, rays, memory };
  BudgetExceeded(Resource r, const std::string& what) : std::runtime_error(what), resource_(r) {}
  Resource resource() const { return resource_; }

 private:
  Resource resource_;
};

class UnboundedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  std::optional<std::chrono::duration<double>> wall_time;
  std::optional<std::size_t> max_rays;
  std::optional<std::size_t> max_megabytes;
};

enum class AdjacencyTest {
  /// Two rays are adjacent iff no third ray is tight on all their common constraints.
  combinatorial,
  /// Two rays are adjacent iff their common constraints have rank dim - 2.
  algebraic,
};

struct DdOptions {
  Budget budget;
  unsigned jobs = 1;
  AdjacencyTest adjacency = AdjacencyTest::combinatorial;
};

struct DdStats {
  std::size_t constraints = 0;
  std::size_t peak_rays = 0;
  std::size_t adjacency_tests = 0;
};

/// Extreme rays (primitive integer vectors, sorted) of the pointed cone
/// {x in R^dim : a x >= 0}. Throws std::invalid_argument when the cone has a
/// nontrivial lineality space.
std::vector<IntegerVector> cone_extreme_rays(const std::vector<IntegerVector>& a, std::size_t dim,
                                             const DdOptions& options = {}, DdStats* stats = nullptr);

/// Irredundant facets (integer-normalized, sorted) plus affine-hull equations.
HRep facets_from_vertices(const VRep& v, const DdOptions& options = {}, DdStats* stats = nullptr);

/// All vertices, sorted. Throws UnboundedError if the polyhedron has a
/// recession direction, unless `allow_unbounded` (rays are then reported).
VRep vertices_from_inequalities(const HRep& h, const DdOptions& options = {}, bool allow_unbounded = false,
                                DdStats* stats = nullptr);

// ---------------------------------------------------------------- linear programming

/// maximize c.x subject to le_rows x <= le_rhs, eq_rows x = eq_rhs, x_j >= 0 where nonneg[j].
struct LinearProgram {
  std::size_t num_vars = 0;
  RationalVector objective;
  std::vector<RationalVector> le_rows;
  RationalVector le_rhs;
  std::vector<RationalVector> eq_rows;
  RationalVector eq_rhs;
  std::vector<bool> nonneg;  ///< empty means all variables free
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  RationalVector x;
  RationalVector le_duals;  ///< >= 0
  RationalVector eq_duals;
  std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex with Bland's rule, exact throughout.
LpSolution solve_lp(const LinearProgram& lp);

/// Primal feasibility, dual feasibility and equal objective values.
bool check_optimality_certificate(const LinearProgram& lp, const LpSolution& sol);

struct LpResult {
  Rational optimum;
  RationalVector argmax;
  RationalVector inequality_duals;
  RationalVector equation_duals;
};

/// Throws InfeasibleError or UnboundedError.
LpResult lp_maximize(std::span<const Rational> objective, const HRep& h);

// ---------------------------------------------------------------- text format

/// One row per line: coefficients then bound for "normal . x <= bound"; lines
/// starting with "=" are equations. "#" starts a comment; a leading
/// "# hrep <family> <n> <dim>" comment records the ambient space.
void write_hrep_text(std::ostream& out, const HRep& h);
HRep read_hrep_text(std::istream& in);

}  // namespace bnpoly
