#include <stdexcept>

#include "bnpoly/polyhedra.hpp"

namespace bnpoly {
namespace {

struct Column {
  std::size_t var;
  int sign;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), t_(rows, RationalVector(cols + 1, Rational(0))), basis_(rows, 0) {}

  RationalVector& row(std::size_t i) { return t_[i]; }
  const RationalVector& row(std::size_t i) const { return t_[i]; }
  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t& basis(std::size_t i) { return basis_[i]; }
  std::size_t basis(std::size_t i) const { return basis_[i]; }
  const Rational& rhs(std::size_t i) const { return t_[i][cols_]; }

  void set_costs(const RationalVector& cost) {
    reduced_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = -cost[j];
    for (std::size_t i = 0; i < rows(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(t_[i][j]) != 0) reduced_[j] += cb * t_[i][j];
      }
    }
  }

  const RationalVector& reduced() const { return reduced_; }

  void pivot(std::size_t r, std::size_t e) {
    RationalVector& pr = t_[r];
    const Rational inv = Rational(1) / pr[e];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (sgn(pr[j]) != 0) {
        pr[j] *= inv;
        support.push_back(j);
      }
    }
    auto eliminate = [&](RationalVector& target) {
      if (sgn(target[e]) == 0) return;
      const Rational f = target[e];
      for (std::size_t j : support) target[j] -= f * pr[j];
    };
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i != r) eliminate(t_[i]);
    }
    if (!reduced_.empty()) eliminate(reduced_);
    basis_[r] = e;
    ++pivots_;
  }

  /// Bland's rule. Returns false if unbounded.
  bool optimize(const std::vector<char>& may_enter) {
    while (true) {
      std::size_t e = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (may_enter[j] && sgn(reduced_[j]) < 0) {
          e = j;
          break;
        }
      }
      if (e == cols_) return true;
      std::size_t leave = rows();
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (sgn(t_[i][e]) <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][e];
        if (leave == rows() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows()) return false;
      pivot(leave, e);
    }
  }

  std::size_t pivots() const { return pivots_; }

 private:
  std::size_t cols_;
  std::vector<RationalVector> t_;
  std::vector<std::size_t> basis_;
  RationalVector reduced_;
  std::size_t pivots_ = 0;
};

void check_shape(const LinearProgram& lp) {
  const auto nv = lp.num_vars;
  if (lp.objective.size() != nv) throw std::invalid_argument("objective length differs from variable count");
  if (lp.le_rows.size() != lp.le_rhs.size() || lp.eq_rows.size() != lp.eq_rhs.size()) {
    throw std::invalid_argument("row and right-hand side counts differ");
  }
  for (const auto& r : lp.le_rows) {
    if (r.size() != nv) throw std::invalid_argument("constraint row length differs from variable count");
  }
  for (const auto& r : lp.eq_rows) {
    if (r.size() != nv) throw std::invalid_argument("constraint row length differs from variable count");
  }
  if (!lp.nonneg.empty() && lp.nonneg.size() != nv) throw std::invalid_argument("sign vector length mismatch");
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  check_shape(lp);
  const std::size_t nv = lp.num_vars;
  const std::size_t m_le = lp.le_rows.size();
  const std::size_t m = m_le + lp.eq_rows.size();
  auto is_nonneg = [&](std::size_t j) { return !lp.nonneg.empty() && lp.nonneg[j]; };

  std::vector<Column> structural;
  for (std::size_t j = 0; j < nv; ++j) {
    structural.push_back({j, 1});
    if (!is_nonneg(j)) structural.push_back({j, -1});
  }
  const std::size_t ns = structural.size();
  const std::size_t slack_base = ns;
  const std::size_t art_base = ns + m_le;

  auto row_of = [&](std::size_t i) -> const RationalVector& {
    return i < m_le ? lp.le_rows[i] : lp.eq_rows[i - m_le];
  };
  auto rhs_of = [&](std::size_t i) -> const Rational& { return i < m_le ? lp.le_rhs[i] : lp.eq_rhs[i - m_le]; };

  std::vector<int> sigma(m, 1);
  std::vector<std::size_t> id_col(m);
  std::size_t n_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(rhs_of(i)) < 0) sigma[i] = -1;
    const bool needs_art = i >= m_le || sigma[i] < 0;
    id_col[i] = needs_art ? art_base + n_art++ : slack_base + i;
  }
  const std::size_t total = art_base + n_art;

  Tableau tab(m, total);
  for (std::size_t i = 0; i < m; ++i) {
    auto& row = tab.row(i);
    const auto& a = row_of(i);
    for (std::size_t c = 0; c < ns; ++c) {
      const Rational& coef = a[structural[c].var];
      if (sgn(coef) != 0) row[c] = coef * (sigma[i] * structural[c].sign);
    }
    if (i < m_le) row[slack_base + i] = sigma[i];
    row[id_col[i]] = 1;
    row[total] = rhs_of(i) * sigma[i];
    tab.basis(i) = id_col[i];
  }

  std::vector<char> may_enter(total, 1);
  for (std::size_t j = art_base; j < total; ++j) may_enter[j] = 0;

  LpSolution sol;
  // Phase I: drive the artificials to zero.
  if (n_art > 0) {
    RationalVector cost(total, Rational(0));
    for (std::size_t j = art_base; j < total; ++j) cost[j] = -1;
    tab.set_costs(cost);
    tab.optimize(may_enter);
    if (sgn(tab.reduced()[total]) < 0) {
      sol.status = LpStatus::infeasible;
      sol.pivots = tab.pivots();
      return sol;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis(i) < art_base) continue;
      for (std::size_t j = 0; j < art_base; ++j) {
        if (sgn(tab.row(i)[j]) != 0) {
          tab.pivot(i, j);
          break;
        }
      }
      // A row with no structural or slack entry left is redundant and stays inert.
    }
  }

  RationalVector cost(total, Rational(0));
  for (std::size_t c = 0; c < ns; ++c) cost[c] = lp.objective[structural[c].var] * structural[c].sign;
  tab.set_costs(cost);
  const bool bounded = tab.optimize(may_enter);
  sol.pivots = tab.pivots();
  if (!bounded) {
    sol.status = LpStatus::unbounded;
    return sol;
  }
  sol.status = LpStatus::optimal;
  sol.value = tab.reduced()[total];
  sol.x.assign(nv, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t b = tab.basis(i);
    if (b < ns) sol.x[structural[b].var] += tab.rhs(i) * structural[b].sign;
  }
  sol.le_duals.resize(m_le);
  sol.eq_duals.resize(m - m_le);
  for (std::size_t i = 0; i < m; ++i) {
    Rational y = tab.reduced()[id_col[i]] * sigma[i];
    if (i < m_le) {
      sol.le_duals[i] = std::move(y);
    } else {
      sol.eq_duals[i - m_le] = std::move(y);
    }
  }
  return sol;
}

bool check_optimality_certificate(const LinearProgram& lp, const LpSolution& sol) {
  if (sol.status != LpStatus::optimal) return false;
  const std::size_t nv = lp.num_vars;
  if (sol.x.size() != nv || sol.le_duals.size() != lp.le_rows.size() || sol.eq_duals.size() != lp.eq_rows.size()) {
    return false;
  }
  for (std::size_t j = 0; j < nv; ++j) {
    if (!lp.nonneg.empty() && lp.nonneg[j] && sgn(sol.x[j]) < 0) return false;
  }
  for (std::size_t i = 0; i < lp.le_rows.size(); ++i) {
    if (dot(lp.le_rows[i], sol.x) > lp.le_rhs[i]) return false;
    if (sgn(sol.le_duals[i]) < 0) return false;
  }
  for (std::size_t i = 0; i < lp.eq_rows.size(); ++i) {
    if (dot(lp.eq_rows[i], sol.x) != lp.eq_rhs[i]) return false;
  }
  // A^T y against c, variable by variable.
  RationalVector aty(nv, Rational(0));
  for (std::size_t i = 0; i < lp.le_rows.size(); ++i) {
    for (std::size_t j = 0; j < nv; ++j) aty[j] += lp.le_rows[i][j] * sol.le_duals[i];
  }
  for (std::size_t i = 0; i < lp.eq_rows.size(); ++i) {
    for (std::size_t j = 0; j < nv; ++j) aty[j] += lp.eq_rows[i][j] * sol.eq_duals[i];
  }
  for (std::size_t j = 0; j < nv; ++j) {
    const bool nonneg = !lp.nonneg.empty() && lp.nonneg[j];
    if (nonneg ? aty[j] < lp.objective[j] : aty[j] != lp.objective[j]) return false;
  }
  const Rational primal = dot(lp.objective, sol.x);
  const Rational dual = dot(lp.le_rhs, sol.le_duals) + dot(lp.eq_rhs, sol.eq_duals);
  return primal == dual && primal == sol.value;
}

LpResult lp_maximize(std::span<const Rational> objective, const HRep& h) {
  LinearProgram lp;
  lp.num_vars = h.dimension;
  lp.objective.assign(objective.begin(), objective.end());
  for (const auto& ineq : h.inequalities) {
    lp.le_rows.push_back(ineq.normal);
    lp.le_rhs.push_back(ineq.bound);
  }
  for (const auto& eq : h.equations) {
    lp.eq_rows.push_back(eq.normal);
    lp.eq_rhs.push_back(eq.rhs);
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status == LpStatus::infeasible) throw InfeasibleError("linear program is infeasible");
  if (sol.status == LpStatus::unbounded) throw UnboundedError("linear program is unbounded");
  return {sol.value, sol.x, sol.le_duals, sol.eq_duals};
}

}  // namespace bnpoly
