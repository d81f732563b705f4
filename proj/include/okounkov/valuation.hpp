#pragma once
// The valuation-like function nu and value enumeration on subspaces.
//
// nu is built in two stages. The boundary stage divides out the invariant
// section s_1 as often as possible, records the multiplicity, restricts
// the quotient to Y_1 and recurses (Y_1 is itself a catalog model); after
// r steps the section lives on the closed orbit. The vertical stage reads
// the lexicographically minimal exponent of the residual in the ordered
// big-cell chart. Values are compared lexicographically, leftmost entry
// most significant.
//
// Value enumeration over a subspace is a Gaussian process: while two basis
// members share a value, subtract the multiple that cancels the residual's
// lex-min coefficient; the value of the modified member strictly
// increases, and a k-dimensional subspace ends with exactly k values.

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "okounkov/decompose.hpp"
#include "okounkov/model.hpp"
#include "okounkov/polynomial.hpp"

namespace okounkov {

using ValueVector = std::vector<int>;

inline std::string value_to_string(const ValueVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct SectionValue {
  ValueVector value;    // length n
  Polynomial residual;  // nonzero, in the chart variables of the closed orbit
};

inline SectionValue nu_with_residual(const VarietyModel& model, const DivisorClass& divisor,
                                     const Polynomial& s) {
  if (s.is_zero()) throw DomainError("nu of the zero section is undefined");
  auto deg = model.multidegree(s);
  if (!deg || *deg != divisor)
    throw DomainError("section not in the declared space of divisor " +
                      divisor_to_string(divisor) + " on " + model.name);
  if (model.r() == 0) {
    Polynomial residual = s.substitute(model.chart_map);
    if (residual.is_zero())
      throw InternalError("chart parametrization annihilated a nonzero section on " +
                          model.name);
    const Exponents& e = residual.lex_min_term().first;
    ValueVector v(e.begin(), e.end());
    return {std::move(v), std::move(residual)};
  }
  const BoundaryDivisor& e1 = model.boundary.front();
  DividePowerResult div = poly_divide_power(s, e1.section);
  const VarietyModel& y = *model.restriction->model;
  Polynomial t = div.quotient.substitute(model.restriction->images);
  if (t.is_zero())
    throw InternalError("maximally divided section restricts to zero on " + model.name);
  DivisorClass residual_class = divisor;
  for (std::size_t k = 0; k < residual_class.size(); ++k)
    residual_class[k] -= static_cast<int>(div.multiplicity) * e1.cls[k];
  SectionValue sub = nu_with_residual(y, model.psi(residual_class), t);
  ValueVector v;
  v.reserve(model.dimension);
  v.push_back(static_cast<int>(div.multiplicity));
  v.insert(v.end(), sub.value.begin(), sub.value.end());
  return {std::move(v), std::move(sub.residual)};
}

// Boundary part (a_1, ..., a_r) together with the fully reduced residual
// on the closed-orbit chart.
inline std::pair<ValueVector, Polynomial> nu_prime(const VarietyModel& model,
                                                   const DivisorClass& divisor,
                                                   const Polynomial& s) {
  SectionValue full = nu_with_residual(model, divisor, s);
  ValueVector prefix(full.value.begin(), full.value.begin() + model.r());
  return {std::move(prefix), std::move(full.residual)};
}

// Vertical part: lex-min exponent of a nonzero chart polynomial.
inline ValueVector nu_second(const VarietyModel& model, const Polynomial& residual) {
  if (residual.is_zero()) throw DomainError("nu'' of the zero residual is undefined");
  if (residual.num_vars() != model.chart_variables.size())
    throw DomainError("residual is not in the chart variables of " + model.name);
  const Exponents& e = residual.lex_min_term().first;
  return ValueVector(e.begin(), e.end());
}

inline ValueVector nu_full(const VarietyModel& model, const DivisorClass& divisor,
                           const Polynomial& s) {
  return nu_with_residual(model, divisor, s).value;
}

struct ValuedSection {
  ValueVector value;
  Polynomial section;
};

// Adapted basis of a subspace: same span, pairwise distinct values.
inline std::vector<ValuedSection> adapted_basis(const VarietyModel& model,
                                                const DivisorClass& divisor,
                                                const std::vector<Polynomial>& basis) {
  int guard = 0;
  for (int x : divisor) guard += std::max(x, 0);
  std::vector<ValuedSection> items;
  auto evaluate = [&](const Polynomial& p) {
    SectionValue sv = nu_with_residual(model, divisor, p);
    for (int x : sv.value)
      if (x > guard)
        throw InternalError("adapted basis reduction exceeded the degree bound on " +
                            model.name);
    return sv;
  };
  std::vector<Polynomial> residuals;
  for (const auto& p : basis) {
    SectionValue sv = evaluate(p);
    items.push_back({sv.value, p});
    residuals.push_back(sv.residual);
  }
  auto order = [](const ValuedSection& a, const ValuedSection& b) {
    return a.value < b.value;
  };
  for (;;) {
    std::vector<std::size_t> perm(items.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) {
      return items[i].value < items[j].value || (items[i].value == items[j].value && i < j);
    });
    bool reduced = false;
    for (std::size_t k = 0; k + 1 < perm.size(); ++k) {
      std::size_t i = perm[k], j = perm[k + 1];
      if (items[i].value != items[j].value) continue;
      // shared value: cancel the lex-min coefficient of the residuals
      Rational ci = residuals[i].lex_min_term().second;
      Rational cj = residuals[j].lex_min_term().second;
      Polynomial replacement = items[j].section - (cj / ci) * items[i].section;
      if (replacement.is_zero())
        throw DomainError("dependent basis detected during value enumeration");
      SectionValue sv = evaluate(replacement);
      if (!(items[j].value < sv.value))
        throw InternalError("adapted basis reduction failed to increase a value");
      items[j] = {sv.value, std::move(replacement)};
      residuals[j] = std::move(sv.residual);
      reduced = true;
      break;
    }
    if (!reduced) break;
  }
  std::sort(items.begin(), items.end(), order);
  return items;
}

inline std::set<ValueVector> subspace_values(const VarietyModel& model,
                                             const DivisorClass& divisor,
                                             const std::vector<Polynomial>& basis) {
  std::set<ValueVector> values;
  for (const auto& item : adapted_basis(model, divisor, basis)) values.insert(item.value);
  if (values.size() != basis.size())
    throw InternalError("value enumeration produced fewer values than dim");
  return values;
}

}  // namespace okounkov
