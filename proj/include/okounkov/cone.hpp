#pragma once
// Exact rational polyhedral cones in dual representation.
//
// The single core routine is a double description pass turning an
// H-representation {x : Ex = 0, Ax >= 0} into extreme rays plus a
// lineality basis. Inequalities are added one at a time; new rays arise
// only from adjacent pairs straddling the new hyperplane. Adjacency of
// two extreme rays p, q is decided algebraically: the constraints tight
// at both must cut out a subspace of dimension lineality + 2 (the span of
// the minimal face containing p and q equals the zero set of its tight
// constraints, so the rank test is exact even with degenerate inputs).
//
// Every cone carries both representations; constructors recompute the
// dual side so results are canonical: rays and facet normals primitive
// and sorted, lineality and equation bases in reduced echelon form.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "okounkov/lp.hpp"
#include "okounkov/matrix.hpp"
#include "okounkov/rational.hpp"

namespace okounkov {

namespace detail {

struct DdPair {
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};

inline std::vector<IntVec> strip_zero_rows(std::vector<IntVec> rows) {
  std::erase_if(rows, [](const IntVec& v) { return is_zero_vec(v); });
  return rows;
}

// Canonical basis of the span of integer vectors: echelonized, primitive,
// sign-fixed, sorted.
inline std::vector<IntVec> canonical_span_basis(const std::vector<IntVec>& vecs,
                                                std::size_t dim) {
  std::vector<RatVec> rows;
  for (const auto& v : vecs) rows.push_back(to_rational_vec(v));
  if (rows.empty()) return {};
  Echelon e = row_echelon(RatMatrix::from_rows(rows, dim));
  std::vector<IntVec> out;
  for (std::size_t r = 0; r < e.rank; ++r)
    out.push_back(primitive_signed(to_primitive_integer(e.mat.row(r))));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<IntVec> kernel_of_rows(const std::vector<IntVec>& rows, std::size_t dim) {
  if (rows.empty()) {
    std::vector<IntVec> basis;
    for (std::size_t i = 0; i < dim; ++i) {
      IntVec e(dim, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  std::vector<RatVec> rr;
  for (const auto& r : rows) rr.push_back(to_rational_vec(r));
  std::vector<IntVec> out;
  for (const auto& k : kernel_basis(RatMatrix::from_rows(rr, dim)))
    out.push_back(primitive_signed(to_primitive_integer(k)));
  return out;
}

inline DdPair dd_from_hrep(std::size_t dim, std::vector<IntVec> ineqs,
                           std::vector<IntVec> eqs) {
  ineqs = strip_zero_rows(std::move(ineqs));
  eqs = strip_zero_rows(std::move(eqs));
  for (auto& a : ineqs) a = primitive(std::move(a));
  {
    std::set<IntVec> seen;
    std::vector<IntVec> uniq;
    for (auto& a : ineqs)
      if (seen.insert(a).second) uniq.push_back(std::move(a));
    ineqs = std::move(uniq);
  }

  std::vector<IntVec> lin = kernel_of_rows(eqs, dim);
  std::vector<IntVec> rays;
  std::vector<IntVec> processed;

  auto adjacent = [&](const IntVec& p, const IntVec& q) {
    if (lin.size() + 2 > dim) return false;
    std::vector<IntVec> tight = eqs;
    for (const auto& t : processed)
      if (dot(t, p) == 0 && dot(t, q) == 0) tight.push_back(t);
    return rank_of_int(tight, dim) == dim - lin.size() - 2;
  };

  for (const auto& a : ineqs) {
    // If the current lineality is not orthogonal to a, absorb one
    // lineality direction into a new ray instead of splitting rays.
    std::size_t l0_idx = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        l0_idx = i;
        break;
      }
    if (l0_idx < lin.size()) {
      IntVec l0 = lin[l0_idx];
      Integer al0 = dot(a, l0);
      if (al0 < 0) {
        for (Integer& x : l0) x = -x;
        al0 = -al0;
      }
      std::vector<IntVec> new_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == l0_idx) continue;
        Integer ali = dot(a, lin[i]);
        IntVec l(dim);
        for (std::size_t j = 0; j < dim; ++j) l[j] = al0 * lin[i][j] - ali * l0[j];
        new_lin.push_back(primitive_signed(std::move(l)));
      }
      std::vector<IntVec> new_rays;
      for (const auto& r : rays) {
        Integer ar = dot(a, r);
        IntVec v(dim);
        for (std::size_t j = 0; j < dim; ++j) v[j] = al0 * r[j] - ar * l0[j];
        new_rays.push_back(primitive(std::move(v)));
      }
      new_rays.push_back(std::move(l0));
      rays = std::move(new_rays);
      lin = std::move(new_lin);
      processed.push_back(a);
      continue;
    }

    std::vector<IntVec> plus, zero, minus;
    for (const auto& r : rays) {
      Integer s = dot(a, r);
      (s > 0 ? plus : s == 0 ? zero : minus).push_back(r);
    }
    if (minus.empty()) {
      processed.push_back(a);
      continue;
    }
    std::set<IntVec> fresh;
    for (const auto& p : plus)
      for (const auto& n : minus) {
        if (!adjacent(p, n)) continue;
        Integer ap = dot(a, p), an = dot(a, n);
        IntVec w(dim);
        for (std::size_t j = 0; j < dim; ++j) w[j] = ap * n[j] - an * p[j];
        fresh.insert(primitive(std::move(w)));
      }
    rays.clear();
    std::set<IntVec> seen;
    for (auto bucket : {&plus, &zero})
      for (auto& r : *bucket)
        if (seen.insert(r).second) rays.push_back(std::move(r));
    for (const auto& w : fresh)
      if (seen.insert(w).second) rays.push_back(w);
    processed.push_back(a);
  }

  std::sort(rays.begin(), rays.end());
  return {std::move(rays), canonical_span_basis(lin, dim)};
}

}  // namespace detail

struct Cone {
  std::size_t dim = 0;
  std::vector<IntVec> rays;       // extreme rays, primitive, sorted
  std::vector<IntVec> lineality;  // canonical basis, may be empty
  std::vector<IntVec> normals;    // facet inequalities <n,x> >= 0
  std::vector<IntVec> equations;  // <e,x> = 0

  bool is_trivial() const { return rays.empty() && lineality.empty(); }

  bool contains(const RatVec& v) const {
    for (const auto& e : equations)
      if (dot(v, e) != 0) return false;
    for (const auto& n : normals)
      if (dot(v, n) < 0) return false;
    return true;
  }
  bool contains(const IntVec& v) const { return contains(to_rational_vec(v)); }

  bool relative_interior_contains(const RatVec& v) const {
    for (const auto& e : equations)
      if (dot(v, e) != 0) return false;
    for (const auto& n : normals)
      if (dot(v, n) <= 0) return false;
    return true;
  }
  bool relative_interior_contains(const IntVec& v) const {
    return relative_interior_contains(to_rational_vec(v));
  }
};

namespace detail {

inline void check_dual_pair(const Cone& c) {
  for (const auto& r : c.rays) {
    for (const auto& e : c.equations)
      if (dot(e, r) != 0) throw InternalError("cone: ray violates equation");
    for (const auto& n : c.normals)
      if (dot(n, r) < 0) throw InternalError("cone: ray violates facet");
  }
  for (const auto& l : c.lineality) {
    for (const auto& e : c.equations)
      if (dot(e, l) != 0) throw InternalError("cone: lineality violates equation");
    for (const auto& n : c.normals)
      if (dot(n, l) != 0) throw InternalError("cone: lineality not in facet");
  }
}

}  // namespace detail

inline Cone cone_from_rays(std::size_t dim, const std::vector<IntVec>& generators,
                           const std::vector<IntVec>& lineality_gens = {}) {
  for (const auto& g : generators)
    if (g.size() != dim) throw DomainError("cone_from_rays: dimension mismatch");
  for (const auto& l : lineality_gens)
    if (l.size() != dim) throw DomainError("cone_from_rays: dimension mismatch");
  Cone c;
  c.dim = dim;
  // Dual cone of the generated cone, by double description ...
  detail::DdPair dual = detail::dd_from_hrep(dim, generators, lineality_gens);
  c.normals = dual.rays;
  c.equations = dual.lineality;
  // ... and back, which canonicalizes the generators into extreme rays.
  detail::DdPair primal = detail::dd_from_hrep(dim, c.normals, c.equations);
  c.rays = primal.rays;
  c.lineality = primal.lineality;
  detail::check_dual_pair(c);
  return c;
}

inline Cone cone_from_rays(std::size_t dim, const std::vector<RatVec>& generators,
                           const std::vector<RatVec>& lineality_gens = {}) {
  std::vector<IntVec> g, l;
  for (const auto& v : generators) g.push_back(to_primitive_integer(v));
  for (const auto& v : lineality_gens) l.push_back(to_primitive_integer(v));
  return cone_from_rays(dim, g, l);
}

inline Cone cone_from_inequalities(std::size_t dim, const std::vector<IntVec>& normals,
                                   const std::vector<IntVec>& equations = {}) {
  for (const auto& n : normals)
    if (n.size() != dim) throw DomainError("cone_from_inequalities: dimension mismatch");
  for (const auto& e : equations)
    if (e.size() != dim) throw DomainError("cone_from_inequalities: dimension mismatch");
  Cone c;
  c.dim = dim;
  detail::DdPair primal = detail::dd_from_hrep(dim, normals, equations);
  c.rays = primal.rays;
  c.lineality = primal.lineality;
  detail::DdPair dual = detail::dd_from_hrep(dim, c.rays, c.lineality);
  c.normals = dual.rays;
  c.equations = dual.lineality;
  detail::check_dual_pair(c);
  return c;
}

// c2 subset of c1, tested against c1's H-representation.
inline bool contains_cone(const Cone& c1, const Cone& c2) {
  if (c1.dim != c2.dim) throw DomainError("contains_cone: dimension mismatch");
  for (const auto& r : c2.rays)
    if (!c1.contains(r)) return false;
  for (const auto& l : c2.lineality) {
    for (const auto& e : c1.equations)
      if (dot(e, l) != 0) return false;
    for (const auto& n : c1.normals)
      if (dot(n, l) != 0) return false;
  }
  return true;
}

inline bool equal(const Cone& c1, const Cone& c2) {
  return contains_cone(c1, c2) && contains_cone(c2, c1);
}

inline Cone intersect(const Cone& c1, const Cone& c2) {
  if (c1.dim != c2.dim) throw DomainError("intersect: dimension mismatch");
  std::vector<IntVec> normals = c1.normals;
  normals.insert(normals.end(), c2.normals.begin(), c2.normals.end());
  std::vector<IntVec> equations = c1.equations;
  equations.insert(equations.end(), c2.equations.begin(), c2.equations.end());
  return cone_from_inequalities(c1.dim, normals, equations);
}

inline Cone linear_image(const Cone& c, const RatMatrix& m) {
  if (m.cols() != c.dim) throw DomainError("linear_image: dimension mismatch");
  std::vector<RatVec> gens, lin;
  for (const auto& r : c.rays) gens.push_back(m.apply_int(r));
  for (const auto& l : c.lineality) lin.push_back(m.apply_int(l));
  return cone_from_rays(m.rows(), gens, lin);
}

inline Cone linear_preimage(const Cone& c, const RatMatrix& m) {
  if (m.rows() != c.dim) throw DomainError("linear_preimage: dimension mismatch");
  std::vector<IntVec> normals, equations;
  for (const auto& n : c.normals)
    normals.push_back(to_primitive_integer(m.apply_transposed(to_rational_vec(n))));
  for (const auto& e : c.equations)
    equations.push_back(to_primitive_integer(m.apply_transposed(to_rational_vec(e))));
  return cone_from_inequalities(m.cols(), normals, equations);
}

// A point of the cone with every ray coefficient strictly positive that
// maps to `target` under `proj`. Found by maximizing min(coefficients, 1)
// with the exact simplex; the optimum is positive exactly when target lies
// in the relative interior of proj(cone).
inline RatVec relative_interior_point(const Cone& c, const RatMatrix& proj,
                                      const RatVec& target) {
  if (proj.cols() != c.dim) throw DomainError("relative_interior_point: dimension mismatch");
  if (target.size() != proj.rows())
    throw DomainError("relative_interior_point: target size mismatch");
  const std::size_t nr = c.rays.size(), nl = c.lineality.size();
  std::vector<RatVec> proj_rays, proj_lin;
  for (const auto& r : c.rays) proj_rays.push_back(proj.apply_int(r));
  for (const auto& l : c.lineality) proj_lin.push_back(proj.apply_int(l));

  // Variables: xi (nr), mu+ (nl), mu- (nl), t, slack_i (nr), s0.
  const std::size_t vt = nr + 2 * nl;
  const std::size_t nvars = nr + 2 * nl + 1 + nr + 1;
  std::vector<RatVec> rows;
  RatVec rhs;
  for (std::size_t k = 0; k < target.size(); ++k) {
    RatVec row(nvars, Rational(0));
    for (std::size_t i = 0; i < nr; ++i) row[i] = proj_rays[i][k];
    for (std::size_t j = 0; j < nl; ++j) {
      row[nr + j] = proj_lin[j][k];
      row[nr + nl + j] = -proj_lin[j][k];
    }
    rows.push_back(std::move(row));
    rhs.push_back(target[k]);
  }
  for (std::size_t i = 0; i < nr; ++i) {  // xi_i - t - slack_i = 0
    RatVec row(nvars, Rational(0));
    row[i] = 1;
    row[vt] = -1;
    row[vt + 1 + i] = -1;
    rows.push_back(std::move(row));
    rhs.push_back(Rational(0));
  }
  {  // t + s0 = 1
    RatVec row(nvars, Rational(0));
    row[vt] = 1;
    row[nvars - 1] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(Rational(1));
  }
  RatVec cost(nvars, Rational(0));
  cost[vt] = -1;  // maximize t

  LpResult lp = solve_lp(rows, rhs, cost);
  if (lp.status == LpStatus::Infeasible) {
    std::string cert = "[";
    for (std::size_t i = 0; i < lp.farkas.size(); ++i)
      cert += (i ? ", " : "") + to_string(lp.farkas[i]);
    cert += "]";
    throw DomainError("target not in the image of the cone; Farkas certificate " + cert);
  }
  if (lp.status != LpStatus::Optimal || lp.x[vt] <= 0)
    throw DomainError("target not in the relative interior of the projected cone");
  RatVec point(c.dim, Rational(0));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < c.dim; ++j) point[j] += lp.x[i] * c.rays[i][j];
  for (std::size_t j2 = 0; j2 < nl; ++j2) {
    Rational mu = lp.x[nr + j2] - lp.x[nr + nl + j2];
    for (std::size_t j = 0; j < c.dim; ++j) point[j] += mu * c.lineality[j2][j];
  }
  return point;
}

}  // namespace okounkov
