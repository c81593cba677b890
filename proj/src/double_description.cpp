#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "bnpoly/polyhedra.hpp"
#include "bnpoly/simd/bitset_kernels.hpp"
#include "linalg_internal.hpp"

namespace bnpoly {
namespace {

using Clock = std::chrono::steady_clock;

void make_primitive(IntegerVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

Integer int_dot(const IntegerVector& a, const IntegerVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

class Guard {
 public:
  explicit Guard(const Budget& b) : budget_(b), start_(Clock::now()) {}

  bool out_of_time() const { return budget_.wall_time && Clock::now() - start_ > *budget_.wall_time; }

  void check_time() const {
    if (out_of_time()) throw BudgetExceeded(BudgetExceeded::Resource::time, "double description exceeded its time budget");
  }

  void check_size(std::size_t rays, std::size_t dim, std::size_t words) const {
    if (budget_.max_rays && rays > *budget_.max_rays) {
      throw BudgetExceeded(BudgetExceeded::Resource::rays,
                           "double description exceeded " + std::to_string(*budget_.max_rays) + " intermediate rays");
    }
    if (budget_.max_megabytes) {
      const std::size_t bytes = rays * (dim * (sizeof(Integer) + 16) + words * 8 + 64);
      if (bytes / (1024 * 1024) > *budget_.max_megabytes) {
        throw BudgetExceeded(BudgetExceeded::Resource::memory, "double description exceeded its memory budget");
      }
    }
  }

 private:
  Budget budget_;
  Clock::time_point start_;
};

struct RaySet {
  std::size_t words = 0;
  std::vector<IntegerVector> coords;
  std::vector<std::uint64_t> zeros;

  std::size_t size() const { return coords.size(); }
  const std::uint64_t* z(std::size_t i) const { return zeros.data() + i * words; }
  std::uint64_t* z(std::size_t i) { return zeros.data() + i * words; }

  void push(IntegerVector v, const std::uint64_t* zs) {
    coords.push_back(std::move(v));
    zeros.insert(zeros.end(), zs, zs + words);
  }
};

struct NewRay {
  IntegerVector coords;
  std::vector<std::uint64_t> zeros;
};

bool rank_at_least(const std::vector<IntegerVector>& rows, const std::vector<std::size_t>& order,
                   const std::uint64_t* common, std::size_t processed, std::size_t dim, std::size_t target) {
  detail::EchelonBasis basis(dim);
  for (std::size_t k = 0; k < processed; ++k) {
    if (!((common[k / 64] >> (k % 64)) & 1u)) continue;
    basis.add(to_rational(rows[order[k]]));
    if (basis.rank() >= target) return true;
  }
  return basis.rank() >= target;
}

}  // namespace

std::vector<IntegerVector> cone_extreme_rays(const std::vector<IntegerVector>& a, std::size_t dim,
                                             const DdOptions& options, DdStats* stats) {
  std::vector<IntegerVector> rows;
  for (const auto& r : a) {
    if (r.size() != dim) throw std::invalid_argument("constraint row length differs from cone dimension");
    if (std::all_of(r.begin(), r.end(), [](const Integer& x) { return sgn(x) == 0; })) continue;
    IntegerVector p = r;
    make_primitive(p);
    rows.push_back(std::move(p));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  if (dim == 0) return {};

  // Initial simplicial cone from the first independent rows in lexicographic order.
  std::vector<std::size_t> order;
  std::vector<char> used(rows.size(), 0);
  {
    detail::EchelonBasis basis(dim);
    for (std::size_t i = 0; i < rows.size() && order.size() < dim; ++i) {
      if (basis.add(to_rational(rows[i]))) {
        order.push_back(i);
        used[i] = 1;
      }
    }
  }
  if (order.size() < dim) throw std::invalid_argument("cone is not pointed");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!used[i]) order.push_back(i);
  }
  const std::size_t m = order.size();
  const std::size_t words = (m + 63) / 64;

  // Columns of the inverse of the initial block are its extreme rays.
  std::vector<RationalVector> aug(dim, RationalVector(2 * dim, Rational(0)));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) aug[i][j] = rows[order[i]][j];
    aug[i][dim + i] = 1;
  }
  row_reduce(aug, 2 * dim);
  RaySet rays;
  rays.words = words;
  for (std::size_t j = 0; j < dim; ++j) {
    RationalVector col(dim);
    for (std::size_t i = 0; i < dim; ++i) col[i] = aug[i][dim + j];
    std::vector<std::uint64_t> zs(words, 0);
    for (std::size_t k = 0; k < dim; ++k) {
      if (k != j) zs[k / 64] |= std::uint64_t{1} << (k % 64);
    }
    rays.push(primitive_integer(col), zs.data());
  }

  const auto& kern = simd::active_kernels();
  const Guard guard(options.budget);
  const std::size_t need = dim >= 2 ? dim - 2 : 0;
  const unsigned jobs = std::max(1u, options.jobs);
  DdStats local;
  local.constraints = m;
  local.peak_rays = rays.size();

  for (std::size_t k = dim; k < m; ++k) {
    guard.check_time();
    const IntegerVector& h = rows[order[k]];
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = int_dot(h, rays.coords[r]);
      const int sg = sgn(s[r]);
      (sg > 0 ? pos : sg < 0 ? neg : zer).push_back(r);
    }
    const std::uint64_t bit = std::uint64_t{1} << (k % 64);
    if (neg.empty()) {
      for (std::size_t r : zer) rays.z(r)[k / 64] |= bit;
      continue;
    }

    std::atomic<bool> timed_out{false};
    std::atomic<std::size_t> tests{0};
    std::vector<std::vector<NewRay>> found(jobs);
    auto work = [&](unsigned t) {
      std::vector<std::uint64_t> common(words);
      std::size_t local_tests = 0;
      for (std::size_t pi = t; pi < pos.size(); pi += jobs) {
        if (timed_out.load(std::memory_order_relaxed)) return;
        if (guard.out_of_time()) {
          timed_out = true;
          return;
        }
        const std::size_t p = pos[pi];
        for (std::size_t q : neg) {
          kern.and_into(common.data(), rays.z(p), rays.z(q), words);
          if (kern.popcount(common.data(), words) < need) continue;
          ++local_tests;
          bool adjacent = true;
          if (options.adjacency == AdjacencyTest::combinatorial) {
            for (std::size_t r = 0; r < rays.size(); ++r) {
              if (r != p && r != q && kern.is_subset(common.data(), rays.z(r), words)) {
                adjacent = false;
                break;
              }
            }
          } else {
            adjacent = rank_at_least(rows, order, common.data(), k, dim, need);
          }
          if (!adjacent) continue;
          NewRay nr;
          nr.coords.resize(dim);
          for (std::size_t j = 0; j < dim; ++j) nr.coords[j] = s[p] * rays.coords[q][j] - s[q] * rays.coords[p][j];
          make_primitive(nr.coords);
          nr.zeros = common;
          nr.zeros[k / 64] |= bit;
          found[t].push_back(std::move(nr));
        }
      }
      tests += local_tests;
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(work, t);
      for (auto& th : threads) th.join();
    }
    if (timed_out) guard.check_time();
    local.adjacency_tests += tests;

    std::size_t total_new = 0;
    for (const auto& f : found) total_new += f.size();
    guard.check_size(pos.size() + zer.size() + total_new, dim, words);

    RaySet next;
    next.words = words;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (sgn(s[r]) < 0) continue;
      std::vector<std::uint64_t> zs(rays.z(r), rays.z(r) + words);
      if (sgn(s[r]) == 0) zs[k / 64] |= bit;
      next.push(std::move(rays.coords[r]), zs.data());
    }
    // Intermediate order depends on the job count; the final list is sorted.
    for (unsigned t = 0; t < jobs; ++t) {
      for (auto& nr : found[t]) next.push(std::move(nr.coords), nr.zeros.data());
    }
    rays = std::move(next);
    local.peak_rays = std::max(local.peak_rays, rays.size());
    if (std::getenv("BNPOLY_DD_TRACE")) std::fprintf(stderr, "dd %zu/%zu rays %zu +%zu -%zu 0%zu tests %zu\n", k, m, rays.size(), pos.size(), neg.size(), zer.size(), local.adjacency_tests);
  }

  std::vector<IntegerVector> out = std::move(rays.coords);
  std::sort(out.begin(), out.end());
  if (stats) *stats = local;
  return out;
}

HRep facets_from_vertices(const VRep& v, const DdOptions& options, DdStats* stats) {
  if (v.points.empty()) throw std::invalid_argument("cannot take the hull of an empty point set");
  const std::size_t d = v.points.front().size();
  for (const auto& p : v.points) {
    if (p.size() != d) throw std::invalid_argument("points of different dimension");
  }
  HRep out;
  out.ambient = v.ambient;
  out.n = v.n;
  out.dimension = d;

  const RationalVector& p0 = v.points.front();
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < v.points.size(); ++i) {
    RationalVector diff(d);
    for (std::size_t j = 0; j < d; ++j) diff[j] = v.points[i][j] - p0[j];
    diffs.push_back(std::move(diff));
  }
  std::vector<RationalVector> reduced = diffs;
  const auto pivots = row_reduce(reduced, d);
  for (auto& w : nullspace(reduced, d)) {
    const IntegerVector iw = primitive_integer(w);
    DenseEquation eq{to_rational(iw), 0};
    eq.rhs = dot(eq.normal, p0);
    out.equations.push_back(std::move(eq));
  }
  const std::size_t r = pivots.size();
  if (r == 0) return out;

  // Cone of valid (a, beta) on the pivot coordinates: beta - a.v >= 0.
  std::vector<IntegerVector> cone;
  cone.reserve(v.points.size());
  for (const auto& p : v.points) {
    RationalVector row(r + 1);
    for (std::size_t j = 0; j < r; ++j) row[j] = -p[pivots[j]];
    row[r] = 1;
    cone.push_back(primitive_integer(row));
  }
  const auto rays = cone_extreme_rays(cone, r + 1, options, stats);
  for (const auto& ray : rays) {
    bool trivial = true;
    for (std::size_t j = 0; j < r; ++j) trivial = trivial && sgn(ray[j]) == 0;
    if (trivial) continue;
    DenseInequality ineq{RationalVector(d, Rational(0)), Rational(ray[r]), ""};
    for (std::size_t j = 0; j < r; ++j) ineq.normal[pivots[j]] = ray[j];
    out.inequalities.push_back(ineq.normalized());
  }
  std::sort(out.inequalities.begin(), out.inequalities.end(), [](const DenseInequality& x, const DenseInequality& y) {
    if (x.normal != y.normal) return x.normal < y.normal;
    return x.bound < y.bound;
  });
  return out;
}

VRep vertices_from_inequalities(const HRep& h, const DdOptions& options, bool allow_unbounded, DdStats* stats) {
  const std::size_t d = h.dimension;
  std::vector<IntegerVector> cone;
  auto add_row = [&](const RationalVector& normal, const Rational& bound, int sign) {
    if (normal.size() != d) throw std::invalid_argument("constraint length differs from the ambient dimension");
    RationalVector row(d + 1);
    for (std::size_t j = 0; j < d; ++j) row[j] = -normal[j] * sign;
    row[d] = bound * sign;
    cone.push_back(primitive_integer(row));
  };
  for (const auto& ineq : h.inequalities) add_row(ineq.normal, ineq.bound, 1);
  for (const auto& eq : h.equations) {
    add_row(eq.normal, eq.rhs, 1);
    add_row(eq.normal, eq.rhs, -1);
  }
  IntegerVector t_row(d + 1, Integer(0));
  t_row[d] = 1;
  cone.push_back(t_row);

  std::vector<IntegerVector> rays;
  try {
    rays = cone_extreme_rays(cone, d + 1, options, stats);
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const std::invalid_argument&) {
    throw UnboundedError("polyhedron contains a line");
  }
  VRep out;
  out.ambient = h.ambient;
  out.n = h.n;
  out.dimension = d;
  for (const auto& ray : rays) {
    if (sgn(ray[d]) == 0) {
      if (!allow_unbounded) throw UnboundedError("polyhedron is unbounded");
      out.rays.push_back(to_rational(std::span<const Integer>(ray.data(), d)));
      continue;
    }
    RationalVector x(d);
    for (std::size_t j = 0; j < d; ++j) {
      x[j] = Rational(ray[j], ray[d]);
      x[j].canonicalize();
    }
    out.points.push_back(std::move(x));
  }
  std::sort(out.points.begin(), out.points.end());
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

void write_hrep_text(std::ostream& out, const HRep& h) {
  out << "# hrep " << to_string(h.ambient) << ' ' << h.n << ' ' << h.dimension << '\n';
  for (const auto& ineq : h.inequalities) {
    for (const auto& c : ineq.normal) out << format_rational(c) << ' ';
    out << format_rational(ineq.bound) << '\n';
  }
  for (const auto& eq : h.equations) {
    out << '=';
    for (const auto& c : eq.normal) out << ' ' << format_rational(c);
    out << ' ' << format_rational(eq.rhs) << '\n';
  }
}

HRep read_hrep_text(std::istream& in) {
  HRep h;
  bool have_dim = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == '#') {
      std::string kind;
      if (tok == "#" && (ls >> kind) && kind == "hrep") {
        std::string family;
        ls >> family >> h.n >> h.dimension;
        if (family == "fam") {
          h.ambient = IndexFamily::fam;
        } else if (family == "char" || family == "cai") {
          h.ambient = IndexFamily::cai;
        } else if (family == "power" || family == "power_set") {
          h.ambient = IndexFamily::power_set;
        } else {
          throw std::invalid_argument("unknown index family '" + family + "'");
        }
        have_dim = true;
      }
      continue;
    }
    const bool equation = tok == "=";
    std::vector<Rational> values;
    if (!equation) values.push_back(parse_rational(tok));
    while (ls >> tok) values.push_back(parse_rational(tok));
    if (values.empty()) throw std::invalid_argument("empty row on line " + std::to_string(line_no));
    const std::size_t d = values.size() - 1;
    if (!have_dim) {
      h.dimension = d;
      have_dim = true;
    }
    if (d != h.dimension) throw std::invalid_argument("row of wrong length on line " + std::to_string(line_no));
    Rational rhs = values.back();
    values.pop_back();
    if (equation) {
      h.equations.push_back({std::move(values), rhs});
    } else {
      h.inequalities.push_back({std::move(values), rhs, ""});
    }
  }
  return h;
}

}  // namespace bnpoly
