#pragma once
// Exact linear programming: two-phase primal simplex with Bland's rule
// over rationals. Bland's rule is slow but cycle-free, and every pivot is
// exact, so optimality and infeasibility answers are certificates, not
// approximations.
//
// Standard form:  min c^T x  subject to  A x = b,  x >= 0.

#include <cstddef>
#include <vector>

#include "okounkov/matrix.hpp"
#include "okounkov/rational.hpp"

namespace okounkov {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  RatVec x;       // optimal point (status == Optimal)
  RatVec farkas;  // y with y^T A <= 0 and y^T b > 0 (status == Infeasible)
};

namespace detail {

class SimplexTableau {
 public:
  // columns 0..n-1: structural, n..n+m-1: artificial, n+m: rhs
  SimplexTableau(const std::vector<RatVec>& a, const RatVec& b, std::size_t n)
      : m_(a.size()),
        n_(n),
        rhs_col_(n + a.size()),
        t_(a.size(), RatVec(n + a.size() + 1, Rational(0))) {
    flipped_.assign(m_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      bool flip = b[i] < 0;
      flipped_[i] = flip;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? -a[i][j] : a[i][j];
      t_[i][n_ + i] = 1;
      t_[i][rhs_col_] = flip ? -b[i] : b[i];
    }
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
  }

  // Runs simplex for the given column costs. Returns false on unbounded.
  bool optimize(const RatVec& cost, bool allow_artificial_entering) {
    for (;;) {
      RatVec cb(m_);
      for (std::size_t i = 0; i < m_; ++i) cb[i] = cost[basis_[i]];
      // Bland: entering column = smallest index with negative reduced cost.
      std::size_t enter = kNone;
      const std::size_t ncols = n_ + (allow_artificial_entering ? m_ : 0);
      for (std::size_t j = 0; j < ncols; ++j) {
        if (is_basic(j)) continue;
        Rational rc = cost[j];
        for (std::size_t i = 0; i < m_; ++i) rc -= cb[i] * t_[i][j];
        if (rc < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      // Ratio test, ties broken by smallest basis index (Bland).
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = rhs(i) / t_[i][enter];
        if (leave == kNone || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational d = t_[row][col];
    for (Rational& v : t_[row]) v /= d;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || t_[i][col] == 0) continue;
      Rational f = t_[i][col];
      for (std::size_t j = 0; j < t_[i].size(); ++j) t_[i][j] -= f * t_[row][j];
    }
    basis_[row] = col;
  }

  bool is_basic(std::size_t col) const {
    for (std::size_t b : basis_)
      if (b == col) return true;
    return false;
  }

  Rational rhs(std::size_t i) const { return t_[i][rhs_col_]; }
  std::size_t rows() const { return m_; }
  std::size_t vars() const { return n_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const RatVec& row(std::size_t i) const { return t_[i]; }
  bool row_flipped(std::size_t i) const { return flipped_[i]; }

  // Pivot basic artificials out; drop rows that are redundant equations.
  void purge_artificials() {
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < n_; ++j)
        if (t_[i][j] != 0) {
          col = j;
          break;
        }
      if (col != kNone) {
        pivot(i, col);
        ++i;
      } else {
        t_.erase(t_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
        flipped_.erase(flipped_.begin() + static_cast<long>(i));
        --m_;
      }
    }
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

 private:
  std::size_t m_, n_, rhs_col_;
  std::vector<RatVec> t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> flipped_;
};

}  // namespace detail

inline LpResult solve_lp(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c) {
  const std::size_t m = a.size(), n = c.size();
  for (const auto& row : a)
    if (row.size() != n) throw InternalError("solve_lp: ragged constraint matrix");
  if (b.size() != m) throw InternalError("solve_lp: rhs size mismatch");

  detail::SimplexTableau tab(a, b, n);

  // Phase 1: minimize the sum of artificials.
  RatVec phase1(n + m + 1, Rational(0));
  for (std::size_t j = n; j < n + m; ++j) phase1[j] = 1;
  tab.optimize(phase1, /*allow_artificial_entering=*/true);

  Rational infeas = 0;
  for (std::size_t i = 0; i < tab.rows(); ++i)
    if (tab.basis()[i] >= n) infeas += tab.rhs(i);

  LpResult out;
  if (infeas > 0) {
    out.status = LpStatus::Infeasible;
    // Dual optimum y = c_B B^{-1}, read off the artificial columns: that
    // block of the tableau is B^{-1} itself. y^T b' = infeas > 0 and
    // y^T A' <= 0 hold for the sign-flipped system; undo the flips.
    out.farkas.assign(m, Rational(0));
    for (std::size_t j = 0; j < m; ++j) {
      Rational yj = 0;
      for (std::size_t i = 0; i < tab.rows(); ++i)
        if (tab.basis()[i] >= n) yj += tab.row(i)[n + j];
      out.farkas[j] = tab.row_flipped(j) ? -yj : yj;
    }
    return out;
  }

  tab.purge_artificials();

  // Phase 2 on the real objective.
  RatVec phase2(n + m + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!tab.optimize(phase2, /*allow_artificial_entering=*/false)) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  out.status = LpStatus::Optimal;
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i)
    if (tab.basis()[i] < n) out.x[tab.basis()[i]] = tab.rhs(i);
  out.objective = 0;
  for (std::size_t j = 0; j < n; ++j) out.objective += c[j] * out.x[j];
  return out;
}

// Feasibility of A x = b, x >= 0 (phase 1 only).
inline LpResult lp_feasible(const std::vector<RatVec>& a, const RatVec& b) {
  return solve_lp(a, b, RatVec(a.empty() ? 0 : a[0].size(), Rational(0)));
}

}  // namespace okounkov
