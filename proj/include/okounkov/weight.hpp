#pragma once
// Weights in fundamental-weight coordinates and the Chevalley operators,
// realized as derivations of the model's coordinate ring. Each simple-root
// index carries a raising and a lowering operator, given by the images of
// the coordinates; both extend to all sections by the Leibniz rule.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "okounkov/polynomial.hpp"
#include "okounkov/rational.hpp"

namespace okounkov {

using Weight = std::vector<int>;

inline Weight add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw InternalError("weight rank mismatch");
  Weight w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = a[i] + b[i];
  return w;
}

inline bool is_dominant(const Weight& w) {
  for (int x : w)
    if (x < 0) return false;
  return true;
}

inline std::string weight_to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

enum class ChevalleyOp { Raise, Lower };

struct ChevalleyAction {
  std::size_t rank = 0;
  // images[op][coordinate]: degree <= 1 polynomial in the model coordinates
  std::vector<std::vector<Polynomial>> raise_images;
  std::vector<std::vector<Polynomial>> lower_images;
  std::vector<Weight> coordinate_weights;
  std::vector<Weight> simple_roots;  // alpha_i in fundamental-weight coordinates
};

// Leibniz extension of the coordinate action: the term c * x^e contributes
// sum_j e_j * c * x^(e - delta_j) * images[j].
inline Polynomial apply_derivation(const ChevalleyAction& action, ChevalleyOp which,
                                   std::size_t index, const Polynomial& p) {
  if (index >= action.rank) throw DomainError("derivation index out of range");
  const auto& images =
      which == ChevalleyOp::Raise ? action.raise_images[index] : action.lower_images[index];
  if (images.size() != p.num_vars())
    throw InternalError("derivation images do not match coordinate count");
  Polynomial out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0 || images[j].is_zero()) continue;
      Exponents m = e;
      --m[j];
      out += Polynomial::monomial(m, c * e[j]) * images[j];
    }
  }
  return out;
}

inline Weight weight_of_monomial(const ChevalleyAction& action, const Exponents& exps) {
  if (exps.size() != action.coordinate_weights.size())
    throw DomainError("weight_of_monomial: exponent length mismatch");
  Weight w(action.rank, 0);
  for (std::size_t j = 0; j < exps.size(); ++j)
    for (std::size_t k = 0; k < action.rank; ++k)
      w[k] += static_cast<int>(exps[j]) * action.coordinate_weights[j][k];
  return w;
}

// Common weight of all terms, if p is a weight vector.
inline std::optional<Weight> weight_of_polynomial(const ChevalleyAction& action,
                                                  const Polynomial& p) {
  std::optional<Weight> w;
  for (const auto& [e, c] : p.terms()) {
    Weight t = weight_of_monomial(action, e);
    if (!w)
      w = t;
    else if (*w != t)
      return std::nullopt;
  }
  return w;
}

}  // namespace okounkov
