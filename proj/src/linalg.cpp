#include <algorithm>
#include <stdexcept>

#include "bnpoly/polyhedra.hpp"
#include "linalg_internal.hpp"

namespace bnpoly {

Rational dot(std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot product of vectors of different length");
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0 && sgn(y[i]) != 0) sum += x[i] * y[i];
  }
  return sum;
}

std::vector<std::size_t> row_reduce(std::vector<RationalVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = Rational(1) / rows[r][c];
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < cols; ++j) {
      if (sgn(rows[r][j]) != 0) {
        rows[r][j] *= inv;
        support.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j : support) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t matrix_rank(std::vector<RationalVector> rows, std::size_t cols) {
  detail::EchelonBasis basis(cols);
  for (auto& row : rows) {
    basis.add(std::move(row));
    if (basis.rank() == cols) break;
  }
  return basis.rank();
}

std::vector<RationalVector> nullspace(std::vector<RationalVector> rows, std::size_t cols) {
  const auto pivots = row_reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

IntegerVector primitive_integer(std::span<const Rational> v) {
  Integer lcm = 1;
  for (const auto& q : v) {
    if (sgn(q) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  IntegerVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (lcm / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

RationalVector to_rational(std::span<const Integer> v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

std::size_t affine_rank(std::span<const RationalVector> points) {
  if (points.empty()) throw std::invalid_argument("affine rank of an empty point set");
  const std::size_t d = points.front().size();
  detail::EchelonBasis basis(d);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != d) throw std::invalid_argument("points of different dimension");
    RationalVector diff(d);
    for (std::size_t j = 0; j < d; ++j) diff[j] = points[i][j] - points.front()[j];
    basis.add(std::move(diff));
    if (basis.rank() == d) break;
  }
  return basis.rank() + 1;
}

RationalVector centroid(std::span<const RationalVector> points) {
  if (points.empty()) throw std::invalid_argument("centroid of an empty point set");
  const std::size_t d = points.front().size();
  RationalVector sum(d, Rational(0));
  for (const auto& p : points) {
    if (p.size() != d) throw std::invalid_argument("points of different dimension");
    for (std::size_t j = 0; j < d; ++j) sum[j] += p[j];
  }
  const Rational k(static_cast<long>(points.size()));
  for (auto& x : sum) x /= k;
  return sum;
}

DenseInequality DenseInequality::normalized() const {
  DenseInequality out{RationalVector(normal.size()), 0, label};
  const bool zero_normal = std::all_of(normal.begin(), normal.end(), [](const Rational& q) { return sgn(q) == 0; });
  RationalVector all = normal;
  all.push_back(bound);
  IntegerVector ints;
  if (zero_normal) {
    ints = primitive_integer(all);
  } else {
    ints = primitive_integer(normal);
    // Scale applied to the normal, carried over to the bound.
    Rational scale = 0;
    for (std::size_t i = 0; i < normal.size(); ++i) {
      if (sgn(normal[i]) != 0) {
        scale = Rational(ints[i]) / normal[i];
        break;
      }
    }
    Rational b = bound * scale;
    if (b.get_den() != 1) {
      ints = primitive_integer(all);
    } else {
      ints.push_back(b.get_num());
    }
  }
  for (std::size_t i = 0; i < normal.size(); ++i) out.normal[i] = ints[i];
  out.bound = ints.back();
  return out;
}

std::size_t ambient_dimension(IndexFamily family, int n) {
  switch (family) {
    case IndexFamily::fam:
      return static_cast<std::size_t>(n) * ((std::size_t{1} << (n - 1)) - 1);
    case IndexFamily::cai:
      return (std::size_t{1} << n) - static_cast<std::size_t>(n) - 1;
    case IndexFamily::power_set:
      return std::size_t{1} << n;
  }
  return 0;
}

Face face_of(const DenseInequality& ineq, std::span<const RationalVector> points) {
  Face face;
  std::vector<RationalVector> tight;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rational s = ineq.slack(points[i]);
    if (sgn(s) < 0) throw InvalidInequality("inequality violated by point " + std::to_string(i));
    if (sgn(s) == 0) {
      face.tight.push_back(i);
      tight.push_back(points[i]);
    }
  }
  face.dimension = tight.empty() ? -1 : static_cast<long>(affine_rank(tight)) - 1;
  return face;
}

bool is_facet(const DenseInequality& ineq, std::span<const RationalVector> points) {
  const Face f = face_of(ineq, points);
  return f.dimension == static_cast<long>(affine_rank(points)) - 2;
}

}  // namespace bnpoly
