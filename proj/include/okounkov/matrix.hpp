#pragma once
// Dense exact rational matrices and reduced row echelon form. Sized for
// desk-scale problems (section spaces of a few hundred monomials).

#include <cstddef>
#include <optional>
#include <vector>

#include "okounkov/rational.hpp"

namespace okounkov {

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static RatMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InternalError("from_rows: ragged input");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatVec row(std::size_t i) const {
    RatVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
  }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  // v -> M v
  RatVec apply(const RatVec& v) const {
    if (v.size() != cols_) throw InternalError("apply: size mismatch");
    RatVec out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
  }

  RatVec apply_int(const IntVec& v) const { return apply(to_rational_vec(v)); }

  // w -> M^T w (pullback of a linear functional)
  RatVec apply_transposed(const RatVec& w) const {
    if (w.size() != rows_) throw InternalError("apply_transposed: size mismatch");
    RatVec out(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[j] += at(i, j) * w[i];
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

struct Echelon {
  RatMatrix mat;                 // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank = 0;
};

inline Echelon row_echelon(RatMatrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rational d = m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) /= d;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = r;
  e.mat = std::move(m);
  return e;
}

inline std::size_t rank_of(const std::vector<RatVec>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return row_echelon(RatMatrix::from_rows(rows, cols)).rank;
}

inline std::size_t rank_of_int(const std::vector<IntVec>& rows, std::size_t cols) {
  std::vector<RatVec> rr;
  rr.reserve(rows.size());
  for (const auto& r : rows) rr.push_back(to_rational_vec(r));
  return rank_of(rr, cols);
}

// Basis of {x : M x = 0}, one vector per free column.
inline std::vector<RatVec> kernel_basis(const RatMatrix& m) {
  Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    RatVec v(m.cols(), Rational(0));
    v[c] = 1;
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.mat.at(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Coefficients expressing `target` in the span of `gens`, or nullopt.
// Solves [gens^T | target] by elimination; gens need not be independent.
inline std::optional<RatVec> express_in_span(const std::vector<RatVec>& gens,
                                             const RatVec& target) {
  const std::size_t n = target.size();
  RatMatrix m(n, gens.size() + 1);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].size() != n) throw InternalError("express_in_span: size mismatch");
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = gens[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) m.at(i, gens.size()) = target[i];
  Echelon e = row_echelon(std::move(m));
  RatVec coeff(gens.size(), Rational(0));
  for (std::size_t r = 0; r < e.rank; ++r) {
    if (e.pivots[r] == gens.size()) return std::nullopt;  // inconsistent
    coeff[e.pivots[r]] = e.mat.at(r, gens.size());
  }
  return coeff;
}

}  // namespace okounkov
