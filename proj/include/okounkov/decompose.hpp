#pragma once
// Decomposition of section spaces into irreducible highest-weight pieces.
//
// The algorithm is pure linear algebra: group the monomial basis of
// H^0(X, O(D)) by weight, compute the joint kernel of all raising
// operators inside each weight space (these are the highest-weight
// vectors), and grow each irreducible piece by applying lowering
// operators until the span stabilizes. Sphericity of the catalog models
// means every highest weight appears at most once per section space;
// a second occurrence is reported as a model-definition bug.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "okounkov/matrix.hpp"
#include "okounkov/model.hpp"
#include "okounkov/weight.hpp"

namespace okounkov {

struct IsotypicPiece {
  Weight highest_weight;
  std::vector<Polynomial> basis;     // basis[0] is the highest-weight vector
  Polynomial highest_weight_vector;  // normalized: lex-max coefficient 1
};

namespace detail {

// Incremental row-reduced span of coefficient vectors.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t width) : width_(width) {}

  std::size_t size() const { return rows_.size(); }

  // Reduces v against the span; inserts the reduced vector when it is
  // independent. Returns true if inserted.
  bool insert(RatVec v) {
    if (v.size() != width_) throw InternalError("SpanBuilder: width mismatch");
    reduce(v);
    std::size_t piv = pivot_of(v);
    if (piv == width_) return false;
    Rational lead = v[piv];
    for (auto& x : v) x /= lead;
    for (auto& row : rows_)
      if (row[piv] != 0) {
        Rational f = row[piv];
        for (std::size_t j = 0; j < width_; ++j) row[j] -= f * v[j];
      }
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(RatVec v) const {
    reduce(v);
    return pivot_of(v) == width_;
  }

 private:
  void reduce(RatVec& v) const {
    for (const auto& row : rows_) {
      std::size_t piv = pivot_of(row);
      if (v[piv] == 0) continue;
      Rational f = v[piv] / row[piv];
      for (std::size_t j = 0; j < width_; ++j) v[j] -= f * row[j];
    }
  }
  std::size_t pivot_of(const RatVec& v) const {
    for (std::size_t j = 0; j < width_; ++j)
      if (v[j] != 0) return j;
    return width_;
  }

  std::size_t width_;
  std::vector<RatVec> rows_;
};

inline RatVec coefficient_vector(const Polynomial& p,
                                 const std::map<Exponents, std::size_t>& index) {
  RatVec v(index.size(), Rational(0));
  for (const auto& [e, c] : p.terms()) {
    auto it = index.find(e);
    if (it == index.end())
      throw InternalError("polynomial leaves the declared section space");
    v[it->second] = c;
  }
  return v;
}

}  // namespace detail

inline std::vector<IsotypicPiece> decompose_sections(const VarietyModel& model,
                                                     const DivisorClass& divisor) {
  const std::vector<Exponents> monomials = section_space_basis(model, divisor);
  if (monomials.empty()) return {};
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);

  // Group the monomial basis by weight.
  std::map<Weight, std::vector<Exponents>> by_weight;
  for (const auto& e : monomials)
    by_weight[weight_of_monomial(model.action, e)].push_back(e);

  std::vector<IsotypicPiece> pieces;
  for (const auto& [weight, mons] : by_weight) {
    // Joint kernel of the raising operators on this weight space.
    std::vector<RatVec> rows;  // constraint rows: one per (op, target monomial)
    for (std::size_t op = 0; op < model.rank(); ++op) {
      std::map<Exponents, std::size_t> targets;
      std::vector<Polynomial> images;
      for (const auto& e : mons) {
        Polynomial img = apply_derivation(model.action, ChevalleyOp::Raise, op,
                                          Polynomial::monomial(e, Rational(1)));
        for (const auto& [te, tc] : img.terms()) targets.emplace(te, targets.size());
        images.push_back(std::move(img));
      }
      if (targets.empty()) continue;
      std::vector<RatVec> block(targets.size(), RatVec(mons.size(), Rational(0)));
      for (std::size_t j = 0; j < mons.size(); ++j)
        for (const auto& [te, tc] : images[j].terms()) block[targets.at(te)][j] = tc;
      rows.insert(rows.end(), block.begin(), block.end());
    }
    std::vector<RatVec> kernel;
    if (rows.empty()) {
      // no raising image at all: the whole weight space is highest weight
      for (std::size_t j = 0; j < mons.size(); ++j) {
        RatVec v(mons.size(), Rational(0));
        v[j] = 1;
        kernel.push_back(std::move(v));
      }
    } else {
      kernel = kernel_basis(RatMatrix::from_rows(rows, mons.size()));
    }
    if (kernel.empty()) continue;
    if (kernel.size() > 1)
      throw CheckFailure("model " + model.name + " violates multiplicity-freeness: weight " +
                         weight_to_string(weight) + " has " +
                         std::to_string(kernel.size()) + " highest-weight vectors at divisor " +
                         divisor_to_string(divisor));
    if (!is_dominant(weight))
      throw CheckFailure("model " + model.name + ": highest-weight vector of non-dominant weight " +
                         weight_to_string(weight));

    Polynomial hw(model.num_coords());
    for (std::size_t j = 0; j < mons.size(); ++j)
      if (kernel[0][j] != 0) hw.add_term(mons[j], kernel[0][j]);
    hw = (Rational(1) / hw.lex_max_term().second) * hw;

    // Grow V(lambda) by lowering operators until the span stabilizes.
    IsotypicPiece piece;
    piece.highest_weight = weight;
    piece.highest_weight_vector = hw;
    detail::SpanBuilder span(monomials.size());
    span.insert(detail::coefficient_vector(hw, index));
    piece.basis.push_back(hw);
    std::deque<Polynomial> queue{hw};
    while (!queue.empty()) {
      Polynomial p = std::move(queue.front());
      queue.pop_front();
      for (std::size_t op = 0; op < model.rank(); ++op) {
        Polynomial q = apply_derivation(model.action, ChevalleyOp::Lower, op, p);
        if (q.is_zero()) continue;
        if (span.insert(detail::coefficient_vector(q, index))) {
          piece.basis.push_back(q);
          queue.push_back(q);
        }
      }
    }

    Integer expected = weyl_dimension(model.group, weight);
    if (Integer(piece.basis.size()) != expected)
      throw CheckFailure("model " + model.name + ": piece " + weight_to_string(weight) +
                         " at divisor " + divisor_to_string(divisor) + " has dimension " +
                         std::to_string(piece.basis.size()) + ", Weyl dimension is " +
                         expected.str());
    pieces.push_back(std::move(piece));
  }

  std::sort(pieces.begin(), pieces.end(), [](const IsotypicPiece& a, const IsotypicPiece& b) {
    return a.highest_weight < b.highest_weight;
  });

  std::size_t total = 0;
  for (const auto& p : pieces) total += p.basis.size();
  if (total != monomials.size())
    throw CheckFailure("model " + model.name + ": isotypic pieces span dimension " +
                       std::to_string(total) + " of " + std::to_string(monomials.size()) +
                       " at divisor " + divisor_to_string(divisor));
  return pieces;
}

// Highest-weight vectors on the divisor grid [0,bound]^rho \ {0} that are
// not products of lower-degree ones. By multiplicity-freeness the product
// structure is visible on the (divisor, weight) index set alone.
inline std::vector<std::tuple<Polynomial, DivisorClass, Weight>> u_invariant_generators(
    const VarietyModel& model, int bound) {
  std::vector<std::tuple<Polynomial, DivisorClass, Weight>> out;
  if (bound <= 0) return out;
  std::vector<DivisorClass> grid = divisor_grid(model.picard_rank, bound);
  std::map<DivisorClass, std::vector<IsotypicPiece>> pieces;
  std::set<std::pair<DivisorClass, Weight>> index_set;
  for (const auto& dv : grid) {
    bool zero = std::all_of(dv.begin(), dv.end(), [](int x) { return x == 0; });
    if (zero) continue;
    pieces[dv] = decompose_sections(model, dv);
    for (const auto& p : pieces[dv]) index_set.emplace(dv, p.highest_weight);
  }
  auto decomposable = [&](const DivisorClass& dv, const Weight& w) {
    for (const auto& [d1, w1] : index_set) {
      DivisorClass d2(dv.size());
      bool ok = true;
      for (std::size_t i = 0; i < dv.size(); ++i) {
        d2[i] = dv[i] - d1[i];
        ok &= (d2[i] >= 0);
      }
      if (!ok) continue;
      if (std::all_of(d2.begin(), d2.end(), [](int x) { return x == 0; })) continue;
      Weight w2(w.size());
      ok = true;
      for (std::size_t i = 0; i < w.size(); ++i) {
        w2[i] = w[i] - w1[i];
        ok &= (w2[i] >= 0);
      }
      if (!ok) continue;
      if (index_set.count({d2, w2})) return true;
    }
    return false;
  };
  for (const auto& [dv, ps] : pieces)
    for (const auto& p : ps)
      if (!decomposable(dv, p.highest_weight))
        out.emplace_back(p.highest_weight_vector, dv, p.highest_weight);
  return out;
}

// Memoizes decompositions per divisor class. Purely an evaluation cache;
// models are immutable, so entries never invalidate.
class DecompositionCache {
 public:
  explicit DecompositionCache(const VarietyModel& model) : model_(&model) {}

  const std::vector<IsotypicPiece>& get(const DivisorClass& d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(d, decompose_sections(*model_, d)).first->second;
  }

 private:
  const VarietyModel* model_;
  std::map<DivisorClass, std::vector<IsotypicPiece>> cache_;
};

// Coordinates of p in the concatenated bases of the pieces; used to
// extract isotypic components of products.
inline std::optional<RatVec> coordinates_in_pieces(const VarietyModel& model,
                                                   const DivisorClass& divisor,
                                                   const std::vector<IsotypicPiece>& pieces,
                                                   const Polynomial& p) {
  std::vector<Exponents> monomials = section_space_basis(model, divisor);
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  std::vector<RatVec> gens;
  for (const auto& piece : pieces)
    for (const auto& b : piece.basis) gens.push_back(detail::coefficient_vector(b, index));
  return express_in_span(gens, detail::coefficient_vector(p, index));
}

}  // namespace okounkov
