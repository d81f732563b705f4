#pragma once
// Enumeration of the moment semigroup and its derived sets.
//
// A moment point is a triple (nu(s), [D], lambda) for s a nonzero section
// of the irreducible piece V(lambda) of H^0(X, O(D)). Enumeration walks
// the divisor grid [0, bound]^rho, decomposes each section space, and
// records the full value set of every piece together with a witnessing
// section per value, so that closure and restriction checks operate on
// actual sections rather than abstract points.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "okounkov/cone.hpp"
#include "okounkov/decompose.hpp"
#include "okounkov/model.hpp"
#include "okounkov/valuation.hpp"

namespace okounkov {

struct MomentPoint {
  ValueVector value;
  DivisorClass divisor;
  Weight weight;

  auto tie() const { return std::tie(value, divisor, weight); }
  bool operator<(const MomentPoint& o) const { return tie() < o.tie(); }
  bool operator==(const MomentPoint& o) const { return tie() == o.tie(); }

  MomentPoint operator+(const MomentPoint& o) const {
    return {add_int(value, o.value), add(divisor, o.divisor), add(weight, o.weight)};
  }

  IntVec embed() const {
    IntVec v;
    v.reserve(value.size() + divisor.size() + weight.size());
    for (int x : value) v.emplace_back(x);
    for (int x : divisor) v.emplace_back(x);
    for (int x : weight) v.emplace_back(x);
    return v;
  }

  std::string str() const {
    return value_to_string(value) + ";" + divisor_to_string(divisor) + ";" +
           weight_to_string(weight);
  }

 private:
  static ValueVector add_int(const ValueVector& a, const ValueVector& b) {
    if (a.size() != b.size()) throw InternalError("value length mismatch");
    ValueVector v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] + b[i];
    return v;
  }
};

struct OkounkovPoint {
  ValueVector value;
  DivisorClass divisor;
  auto tie() const { return std::tie(value, divisor); }
  bool operator<(const OkounkovPoint& o) const { return tie() < o.tie(); }
  bool operator==(const OkounkovPoint& o) const { return tie() == o.tie(); }
  IntVec embed() const {
    IntVec v;
    for (int x : value) v.emplace_back(x);
    for (int x : divisor) v.emplace_back(x);
    return v;
  }
};

struct RestrictionPair {
  DivisorClass divisor;
  Weight weight;
  bool injective = false;
};

struct MomentEnumeration {
  int bound = 0;
  std::vector<MomentPoint> points;             // sorted, duplicate-free
  std::map<MomentPoint, Polynomial> witness;   // a section attaining each point
};

inline MomentEnumeration enumerate_moment_semigroup(const VarietyModel& model, int bound) {
  if (bound < 1) throw DomainError("degree bound must be at least 1");
  MomentEnumeration out;
  out.bound = bound;
  for (const auto& d : divisor_grid(model.picard_rank, bound)) {
    if (!is_effective(model, d)) continue;
    for (const auto& piece : decompose_sections(model, d)) {
      for (auto& vs : adapted_basis(model, d, piece.basis)) {
        MomentPoint p{vs.value, d, piece.highest_weight};
        out.witness.emplace(p, std::move(vs.section));
        out.points.push_back(std::move(p));
      }
    }
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

// Forgetting the weight. Injective on enumerated data as a consequence of
// the separation of values across pieces; a collision would falsify that
// on the model and is surfaced as a check failure.
inline std::vector<OkounkovPoint> project_to_okounkov(const std::vector<MomentPoint>& points) {
  std::map<OkounkovPoint, const MomentPoint*> seen;
  std::vector<OkounkovPoint> out;
  for (const auto& p : points) {
    OkounkovPoint q{p.value, p.divisor};
    auto [it, fresh] = seen.emplace(q, &p);
    if (!fresh)
      throw CheckFailure("projection collision: " + p.str() + " and " + it->second->str() +
                         " share value and divisor");
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
inline const IsotypicPiece& find_piece(const VarietyModel& model,
                                       const std::vector<IsotypicPiece>& pieces,
                                       const DivisorClass& divisor, const Weight& weight) {
  for (const auto& p : pieces)
    if (p.highest_weight == weight) return p;
  throw DomainError("no piece of weight " + weight_to_string(weight) + " in H^0(O(" +
                    divisor_to_string(divisor) + ")) on " + model.name);
}
}  // namespace detail

// Whether V(weight) restricted to Y_1 is injective; by equivariance and
// irreducibility it suffices to restrict one nonzero element, and the
// highest-weight vector is the canonical choice.
inline bool restriction_injective(const VarietyModel& model, const DivisorClass& divisor,
                                  const Weight& weight) {
  if (model.r() == 0) throw DomainError("no boundary divisor on " + model.name);
  auto pieces = decompose_sections(model, divisor);
  const IsotypicPiece& piece = detail::find_piece(model, pieces, divisor, weight);
  return !piece.highest_weight_vector.substitute(model.restriction->images).is_zero();
}

struct JKData {
  std::vector<RestrictionPair> pairs;  // every piece on the grid, with verdict
  std::vector<std::pair<DivisorClass, Weight>> J;  // the injective ones
  Cone K;  // cone over J in divisor (+) weight coordinates
};

inline JKData build_J_K(const VarietyModel& model, int bound) {
  if (model.r() == 0) throw DomainError("no boundary divisor on " + model.name);
  JKData out;
  std::vector<IntVec> gens;
  for (const auto& d : divisor_grid(model.picard_rank, bound)) {
    if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; })) continue;
    if (!is_effective(model, d)) continue;
    for (const auto& piece : decompose_sections(model, d)) {
      bool inj =
          !piece.highest_weight_vector.substitute(model.restriction->images).is_zero();
      out.pairs.push_back({d, piece.highest_weight, inj});
      if (!inj) continue;
      out.J.emplace_back(d, piece.highest_weight);
      IntVec v;
      for (int x : d) v.emplace_back(x);
      for (int x : piece.highest_weight) v.emplace_back(x);
      gens.push_back(std::move(v));
    }
  }
  out.K = cone_from_rays(model.picard_rank + model.rank(), gens);
  return out;
}

struct JYKYData {
  std::vector<std::pair<DivisorClass, Weight>> JY;  // (D|_Y, lambda) for (D, lambda) in J
  Cone KY;
};

inline JYKYData build_JY_KY(const VarietyModel& model, int bound) {
  JKData jk = build_J_K(model, bound);
  const VarietyModel& y = *model.restriction->model;
  JYKYData out;
  std::vector<IntVec> gens;
  std::set<std::pair<DivisorClass, Weight>> seen;
  for (const auto& [d, w] : jk.J) {
    DivisorClass dy = model.psi(d);
    if (!seen.emplace(dy, w).second) continue;
    out.JY.emplace_back(dy, w);
    IntVec v;
    for (int x : dy) v.emplace_back(x);
    for (int x : w) v.emplace_back(x);
    gens.push_back(std::move(v));
  }
  out.KY = cone_from_rays(y.picard_rank + y.rank(), gens);
  return out;
}

struct TildeData {
  std::vector<MomentPoint> J_tilde;    // points of X whose (D, lambda) lies in J
  std::map<MomentPoint, Polynomial> J_tilde_witness;
  std::vector<MomentPoint> JY_tilde;   // their images under actual restriction
  Cone K_tilde;                        // in value (+) divisor (+) weight coordinates of X
  Cone KY_tilde;                       // same blocks on the Y model
};

inline TildeData build_tilde_sets(const VarietyModel& model, int bound) {
  if (model.r() == 0) throw DomainError("no boundary divisor on " + model.name);
  const VarietyModel& y = *model.restriction->model;
  MomentEnumeration enumeration = enumerate_moment_semigroup(model, bound);
  JKData jk = build_J_K(model, bound);
  std::set<std::pair<DivisorClass, Weight>> in_j(jk.J.begin(), jk.J.end());

  TildeData out;
  std::set<MomentPoint> jy_seen;
  for (const auto& p : enumeration.points) {
    if (!in_j.count({p.divisor, p.weight})) continue;
    const Polynomial& s = enumeration.witness.at(p);
    Polynomial t = s.substitute(model.restriction->images);
    if (t.is_zero())
      throw CheckFailure("restriction of a J-point witness vanished: " + p.str());
    DivisorClass dy = model.psi(p.divisor);
    if (model.r() == 1) {
      auto deg = y.multidegree(t);
      if (!deg || *deg != dy)
        throw InternalError("restricted section has unexpected multidegree");
    }
    MomentPoint q{nu_full(y, dy, t), dy, p.weight};
    out.J_tilde.push_back(p);
    out.J_tilde_witness.emplace(p, s);
    if (jy_seen.insert(q).second) out.JY_tilde.push_back(q);
  }
  std::sort(out.JY_tilde.begin(), out.JY_tilde.end());

  std::vector<IntVec> gens, gens_y;
  for (const auto& p : out.J_tilde) gens.push_back(p.embed());
  for (const auto& q : out.JY_tilde) gens_y.push_back(q.embed());
  out.K_tilde =
      cone_from_rays(model.dimension + model.picard_rank + model.rank(), gens);
  out.KY_tilde = cone_from_rays(y.dimension + y.picard_rank + y.rank(), gens_y);
  return out;
}

// The witnessed sum: decompose the product of the witnesses, extract the
// component of weight lambda+mu, and value it. The proposition asserts the
// result is exactly p + q; callers check that equality.
inline std::pair<MomentPoint, Polynomial> semigroup_sum_witness(
    const VarietyModel& model, const MomentPoint& p, const Polynomial& sp,
    const MomentPoint& q, const Polynomial& sq, DecompositionCache* cache = nullptr) {
  if (sp.is_zero() || sq.is_zero()) throw DomainError("sum witness needs nonzero sections");
  Polynomial product = sp * sq;
  DivisorClass d = add(p.divisor, q.divisor);
  Weight w = add(p.weight, q.weight);
  std::vector<IsotypicPiece> local;
  if (!cache) local = decompose_sections(model, d);
  const std::vector<IsotypicPiece>& pieces = cache ? cache->get(d) : local;
  const IsotypicPiece* target = nullptr;
  for (const auto& piece : pieces)
    if (piece.highest_weight == w) target = &piece;
  if (!target)
    throw CheckFailure("V(" + weight_to_string(w) + ") does not occur in H^0(O(" +
                       divisor_to_string(d) + ")) on " + model.name);
  auto coords = coordinates_in_pieces(model, d, pieces, product);
  if (!coords) throw InternalError("product fell outside its section space");
  Polynomial component(model.num_coords());
  std::size_t offset = 0;
  for (const auto& piece : pieces) {
    if (&piece == target)
      for (std::size_t j = 0; j < piece.basis.size(); ++j)
        component += (*coords)[offset + j] * piece.basis[j];
    offset += piece.basis.size();
  }
  if (component.is_zero())
    throw CheckFailure("component of the product in V(" + weight_to_string(w) +
                       ") vanishes for " + p.str() + " + " + q.str());
  return {MomentPoint{nu_full(model, d, component), d, w}, component};
}

// --- cones over enumerated data ----------------------------------------

inline Cone moment_cone(const VarietyModel& model, int bound) {
  MomentEnumeration e = enumerate_moment_semigroup(model, bound);
  std::vector<IntVec> gens;
  for (const auto& p : e.points) gens.push_back(p.embed());
  return cone_from_rays(model.dimension + model.picard_rank + model.rank(), gens);
}

inline Cone okounkov_cone(const VarietyModel& model, int bound) {
  MomentEnumeration e = enumerate_moment_semigroup(model, bound);
  std::vector<IntVec> gens;
  for (const auto& p : project_to_okounkov(e.points)) gens.push_back(p.embed());
  return cone_from_rays(model.dimension + model.picard_rank, gens);
}

// Cone over (divisor, weight) pairs; slicing it at a divisor class gives
// the classical moment polytope.
inline Cone weight_cone(const VarietyModel& model, int bound) {
  MomentEnumeration e = enumerate_moment_semigroup(model, bound);
  std::set<IntVec> gens;
  for (const auto& p : e.points) {
    IntVec v;
    for (int x : p.divisor) v.emplace_back(x);
    for (int x : p.weight) v.emplace_back(x);
    gens.insert(std::move(v));
  }
  return cone_from_rays(model.picard_rank + model.rank(),
                        std::vector<IntVec>(gens.begin(), gens.end()));
}

}  // namespace okounkov
