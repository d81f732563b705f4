#pragma once
// Okounkov bodies and moment polytopes as slices of the global cones:
// intersect with the preimage of the ray through the divisor class, slice
// where the divisor block equals the class exactly, and drop the constant
// block from the vertices.

#include <cstddef>
#include <vector>

#include "okounkov/cone.hpp"
#include "okounkov/polytope.hpp"
#include "okounkov/semigroup.hpp"

namespace okounkov {

namespace detail {

// Slice `cone` (whose coordinates end with a divisor block at
// [offset, offset+rho)) at divisor block == d; return vertices restricted
// to [keep_begin, keep_end).
inline Polytope body_slice(const Cone& cone, const DivisorClass& d, std::size_t offset,
                           std::size_t keep_begin, std::size_t keep_end) {
  bool zero = true;
  for (int x : d) zero &= (x == 0);
  if (zero) throw DomainError("body of the zero divisor class is trivial");
  const std::size_t rho = d.size();
  RatMatrix proj(rho, cone.dim);
  for (std::size_t i = 0; i < rho; ++i) proj.at(i, offset + i) = 1;
  std::vector<IntVec> ray = {[&] {
    IntVec v(rho);
    for (std::size_t i = 0; i < rho; ++i) v[i] = d[i];
    return v;
  }()};
  Cone restricted = intersect(cone, linear_preimage(cone_from_rays(rho, ray), proj));
  std::size_t k = 0;
  while (k < rho && d[k] == 0) ++k;
  IntVec normal(cone.dim, 0);
  normal[offset + k] = 1;
  Polytope sliced = slice(restricted, normal, Rational(d[k]));
  Polytope out;
  out.dim = keep_end - keep_begin;
  for (const auto& v : sliced.vertices)
    out.vertices.emplace_back(v.begin() + keep_begin, v.begin() + keep_end);
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

}  // namespace detail

// Okounkov body of O(D): the value-space slice of the global Okounkov cone.
inline Polytope okounkov_body(const VarietyModel& model, int bound, const DivisorClass& d) {
  if (!is_effective(model, d)) throw DomainError("divisor class is not effective");
  Cone c = okounkov_cone(model, bound);
  return detail::body_slice(c, d, model.dimension, 0, model.dimension);
}

// Moment polytope of O(D): the weight-space slice of the weight cone.
inline Polytope moment_body(const VarietyModel& model, int bound, const DivisorClass& d) {
  if (!is_effective(model, d)) throw DomainError("divisor class is not effective");
  Cone c = weight_cone(model, bound);
  return detail::body_slice(c, d, 0, model.picard_rank,
                            model.picard_rank + model.rank());
}

}  // namespace okounkov
