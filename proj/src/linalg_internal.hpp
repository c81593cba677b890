#pragma once

#include <cstddef>
#include <vector>

#include "bnpoly/ground_model.hpp"

namespace bnpoly::detail {

/// Row echelon basis grown one vector at a time. Each stored row has a
/// leading 1 at its pivot and zeros at the pivots of earlier rows.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

  /// Adds v if independent of the current rows; returns whether it was added.
  bool add(std::vector<Rational> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (sgn(v[p]) == 0) continue;
      const Rational f = v[p];
      for (std::size_t j : support_[k]) v[j] -= f * rows_[k][j];
    }
    std::size_t p = 0;
    while (p < cols_ && sgn(v[p]) == 0) ++p;
    if (p == cols_) return false;
    const Rational inv = Rational(1) / v[p];
    std::vector<std::size_t> support;
    for (std::size_t j = p; j < cols_; ++j) {
      if (sgn(v[j]) != 0) {
        v[j] *= inv;
        support.push_back(j);
      }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    support_.push_back(std::move(support));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::size_t>> support_;
};

}  // namespace bnpoly::detail
