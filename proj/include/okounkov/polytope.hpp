#pragma once
// Bounded slices of cones and exact polytope volumes.
//
// A slice is computed homogeneously: {x in C : <n,x> = level} lifts to the
// cone {(x,s) : x in C, <n,x> = level*s, s >= 0} whose rays with s > 0 are
// exactly the vertices. Volume is taken in the lexicographically first
// coordinate chart of the polytope's affine hull (for full-dimensional
// bodies this is the plain Euclidean volume), by a simplicial decomposition
// that stars the lex-least vertex into recursively triangulated facets.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "okounkov/cone.hpp"
#include "okounkov/matrix.hpp"
#include "okounkov/rational.hpp"

namespace okounkov {

struct Polytope {
  std::size_t dim = 0;             // ambient dimension
  std::vector<RatVec> vertices;    // extreme points, sorted
};

inline Polytope slice(const Cone& c, const IntVec& normal, const Rational& level) {
  if (normal.size() != c.dim) throw DomainError("slice: dimension mismatch");
  if (level <= 0) throw DomainError("slice: level must be positive");
  const std::size_t d = c.dim;
  std::vector<IntVec> eqs, ineqs;
  for (const auto& e : c.equations) {
    IntVec row(e);
    row.push_back(0);
    eqs.push_back(std::move(row));
  }
  {
    IntVec row(normal);
    row.push_back(-rat_num(level));  // <n,x> * den - num * s = 0, scaled below
    // keep exactness with non-integer level: scale the normal by den(level)
    Integer den = rat_den(level);
    if (den != 1)
      for (std::size_t j = 0; j < d; ++j) row[j] *= den;
    eqs.push_back(std::move(row));
  }
  for (const auto& n : c.normals) {
    IntVec row(n);
    row.push_back(0);
    ineqs.push_back(std::move(row));
  }
  {
    IntVec row(d + 1, 0);
    row[d] = 1;
    ineqs.push_back(std::move(row));
  }
  Cone lifted = cone_from_inequalities(d + 1, ineqs, eqs);
  if (!lifted.lineality.empty()) throw DomainError("unbounded slice");
  Polytope p;
  p.dim = d;
  bool has_recession = false;
  for (const auto& r : lifted.rays) {
    if (r[d] == 0) {
      has_recession = true;
      continue;
    }
    RatVec v(d);
    for (std::size_t j = 0; j < d; ++j) v[j] = Rational(r[j], r[d]);
    p.vertices.push_back(std::move(v));
  }
  if (has_recession && !p.vertices.empty()) throw DomainError("unbounded slice");
  std::sort(p.vertices.begin(), p.vertices.end());
  return p;
}

namespace detail {

inline Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw InternalError("determinant: not square");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m.at(piv, c) == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c) == 0) continue;
      Rational f = m.at(i, c) / m.at(c, c);
      for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

// Chart projection: coordinates of the pivot columns of the direction
// span, which embed the affine hull of `pts` bijectively.
inline std::vector<std::size_t> chart_columns(const std::vector<RatVec>& pts) {
  if (pts.size() <= 1) return {};
  std::vector<RatVec> dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVec d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    dirs.push_back(std::move(d));
  }
  Echelon e = row_echelon(RatMatrix::from_rows(dirs, pts[0].size()));
  return e.pivots;
}

inline std::vector<RatVec> project_columns(const std::vector<RatVec>& pts,
                                           const std::vector<std::size_t>& cols) {
  std::vector<RatVec> out;
  for (const auto& p : pts) {
    RatVec q(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) q[j] = p[cols[j]];
    out.push_back(std::move(q));
  }
  return out;
}

// Triangulates conv(pts) where pts are extreme points spanning dimension
// k inside R^k. Returns (k+1)-tuples of indices into pts.
inline std::vector<std::vector<std::size_t>> triangulate_full(
    const std::vector<RatVec>& pts, std::size_t k) {
  if (k == 0 || pts.size() < k + 1) throw InternalError("triangulate: degenerate input");
  if (k == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    return {{lo, hi}};
  }
  if (pts.size() == k + 1) {
    std::vector<std::size_t> all(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) all[i] = i;
    return {all};
  }
  // Facets of conv(pts) from the cone over (1, p).
  std::vector<IntVec> lifted;
  for (const auto& p : pts) {
    RatVec v(k + 1);
    v[0] = 1;
    for (std::size_t j = 0; j < k; ++j) v[j + 1] = p[j];
    lifted.push_back(to_primitive_integer(v));
  }
  Cone hull = cone_from_rays(k + 1, lifted);
  std::size_t base = 0;  // pts need not be sorted; pick lex-least
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i] < pts[base]) base = i;

  std::vector<std::vector<std::size_t>> simplices;
  for (const auto& f : hull.normals) {
    auto value = [&](std::size_t i) {
      Rational s(f[0]);
      for (std::size_t j = 0; j < k; ++j) s += Rational(f[j + 1]) * pts[i][j];
      return s;
    };
    if (value(base) == 0) continue;  // base on this facet: contributes no volume
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (value(i) == 0) tight.push_back(i);
    std::vector<RatVec> fpts;
    for (std::size_t i : tight) fpts.push_back(pts[i]);
    auto cols = chart_columns(fpts);
    if (cols.size() != k - 1) throw InternalError("triangulate: facet dimension off");
    auto sub = triangulate_full(project_columns(fpts, cols), k - 1);
    for (const auto& s : sub) {
      std::vector<std::size_t> simplex{base};
      for (std::size_t local : s) simplex.push_back(tight[local]);
      simplices.push_back(std::move(simplex));
    }
  }
  return simplices;
}

}  // namespace detail

// Exact volume of the polytope inside its affine hull, measured in the
// chart of the lex-first independent coordinates. A point has volume 1.
inline Rational polytope_volume(const Polytope& p) {
  if (p.vertices.empty()) return Rational(0);
  auto cols = detail::chart_columns(p.vertices);
  const std::size_t k = cols.size();
  if (k == 0) return Rational(1);
  auto pts = detail::project_columns(p.vertices, cols);
  auto simplices = detail::triangulate_full(pts, k);
  Rational vol = 0;
  Integer kfact = 1;
  for (std::size_t i = 2; i <= k; ++i) kfact *= i;
  for (const auto& s : simplices) {
    RatMatrix m(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t j = 0; j < k; ++j) m.at(r, j) = pts[s[r + 1]][j] - pts[s[0]][j];
    Rational d = detail::determinant(std::move(m));
    if (d < 0) d = -d;
    vol += d / kfact;
  }
  return vol;
}

}  // namespace okounkov
