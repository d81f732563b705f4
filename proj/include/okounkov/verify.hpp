#pragma once
// Executable embodiments of the verified statements, run per model over
// bounded divisor grids. Each check returns a Report; any exception inside
// a check (including structural CheckFailures raised by the lower layers)
// is converted into a failing entry, so corrupted models degrade into
// failed reports rather than aborts.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "okounkov/bodies.hpp"
#include "okounkov/catalog.hpp"
#include "okounkov/cone.hpp"
#include "okounkov/decompose.hpp"
#include "okounkov/report.hpp"
#include "okounkov/semigroup.hpp"
#include "okounkov/validate.hpp"
#include "okounkov/valuation.hpp"

namespace okounkov {

inline constexpr std::uint64_t kDefaultSeed = 20250810;

namespace detail {

inline Polynomial random_piece_element(std::mt19937_64& rng,
                                       const std::vector<Polynomial>& basis) {
  std::uniform_int_distribution<int> coef(-3, 3);
  for (;;) {
    Polynomial p(basis.front().num_vars());
    for (const auto& b : basis) p += Rational(coef(rng)) * b;
    if (!p.is_zero()) return p;
  }
}

inline std::string rays_to_string(const Cone& c) {
  std::string s;
  for (const auto& r : c.rays) {
    s += s.empty() ? "" : " ";
    s += "(";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + r[i].str();
    s += ")";
  }
  return s.empty() ? "<none>" : s;
}

}  // namespace detail

// Proposition-level separation of values: nu' is constant on every
// isotypic piece and differs between pieces of one section space.
inline Report check_sepvalues(const VarietyModel& model, int bound,
                              std::uint64_t seed = kDefaultSeed) {
  Report rep;
  rep.check = "sepvalues";
  rep.model = model.name;
  std::mt19937_64 rng(seed);
  int spaces = 0, pieces_checked = 0;
  for (const auto& d : divisor_grid(model.picard_rank, bound)) {
    if (!is_effective(model, d)) continue;
    ++spaces;
    auto pieces = decompose_sections(model, d);
    std::vector<ValueVector> prefixes;
    bool constant = true, distinct = true;
    for (const auto& piece : pieces) {
      ++pieces_checked;
      ValueVector base = nu_prime(model, d, piece.highest_weight_vector).first;
      for (const auto& b : piece.basis) constant &= (nu_prime(model, d, b).first == base);
      for (int t = 0; t < 20; ++t) {
        Polynomial s = detail::random_piece_element(rng, piece.basis);
        constant &= (nu_prime(model, d, s).first == base);
      }
      prefixes.push_back(base);
    }
    for (std::size_t i = 0; i < prefixes.size(); ++i)
      for (std::size_t j = i + 1; j < prefixes.size(); ++j)
        distinct &= (prefixes[i] != prefixes[j]);
    rep.add("D=" + divisor_to_string(d), constant && distinct,
            std::to_string(pieces.size()) + " pieces; nu' constant per piece" +
                (pieces.size() > 1 ? ", distinct across pieces" : ""));
  }
  rep.add("coverage", true,
          std::to_string(pieces_checked) + " pieces across " + std::to_string(spaces) +
              " section spaces");
  return rep;
}

// Semigroup closure: the witnessed sum of two enumerated points is their
// componentwise sum. Exercised on all pairs of extreme points and on
// seeded random pairs.
inline Report check_semigroup(const VarietyModel& model, int bound, int samples,
                              std::uint64_t seed = kDefaultSeed) {
  Report rep;
  rep.check = "semigroup";
  rep.model = model.name;
  MomentEnumeration e = enumerate_moment_semigroup(model, bound);
  std::vector<IntVec> gens;
  for (const auto& p : e.points) gens.push_back(p.embed());
  Cone cone = cone_from_rays(model.dimension + model.picard_rank + model.rank(), gens);

  // one witness point per extreme ray (the lex-least point on the ray)
  std::vector<MomentPoint> extreme;
  for (const auto& ray : cone.rays) {
    const MomentPoint* found = nullptr;
    for (const auto& p : e.points)
      if (primitive(p.embed()) == ray) {
        found = &p;
        break;
      }
    if (!found) {
      rep.add("extreme ray realized by a point", false, detail::rays_to_string(cone));
      return rep;
    }
    extreme.push_back(*found);
  }

  DecompositionCache cache(model);
  auto verify_pair = [&](const MomentPoint& p, const MomentPoint& q) {
    try {
      auto [sum, section] =
          semigroup_sum_witness(model, p, e.witness.at(p), q, e.witness.at(q), &cache);
      return sum == p + q;
    } catch (const std::exception&) {
      return false;
    }
  };

  bool extreme_ok = true;
  int extreme_pairs = 0;
  for (std::size_t i = 0; i < extreme.size(); ++i)
    for (std::size_t j = i; j < extreme.size(); ++j) {
      extreme_ok &= verify_pair(extreme[i], extreme[j]);
      ++extreme_pairs;
    }
  rep.add("all pairs of extreme points close", extreme_ok,
          std::to_string(extreme_pairs) + " pairs");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, e.points.size() - 1);
  bool random_ok = true;
  for (int t = 0; t < samples; ++t)
    random_ok &= verify_pair(e.points[pick(rng)], e.points[pick(rng)]);
  rep.add("seeded random pairs close", random_ok, std::to_string(samples) + " pairs");
  return rep;
}

// Forgetting the weight is injective on enumerated data and compatible
// with the semigroup structure.
inline Report check_p_isomorphism(const VarietyModel& model, int bound,
                                  std::uint64_t seed = kDefaultSeed) {
  Report rep;
  rep.check = "p-isomorphism";
  rep.model = model.name;
  MomentEnumeration e = enumerate_moment_semigroup(model, bound);
  try {
    auto proj = project_to_okounkov(e.points);
    rep.add("projection injective", proj.size() == e.points.size(),
            std::to_string(e.points.size()) + " points");
  } catch (const CheckFailure& f) {
    rep.add("projection injective", false, f.what());
    return rep;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, e.points.size() - 1);
  DecompositionCache cache(model);
  bool additive = true;
  for (int t = 0; t < 10; ++t) {
    const MomentPoint& p = e.points[pick(rng)];
    const MomentPoint& q = e.points[pick(rng)];
    try {
      auto [sum, section] =
          semigroup_sum_witness(model, p, e.witness.at(p), q, e.witness.at(q), &cache);
      MomentPoint expected = p + q;
      additive &= (OkounkovPoint{sum.value, sum.divisor} ==
                   OkounkovPoint{expected.value, expected.divisor});
    } catch (const std::exception&) {
      additive = false;
    }
  }
  rep.add("projection additive on sampled sums", additive, "10 pairs");
  return rep;
}

namespace detail {
inline RatMatrix phi_matrix(const VarietyModel& model) {
  // (D, lambda) -> (psi(D), lambda)
  const auto& rd = *model.restriction;
  std::size_t rho_y = rd.model->picard_rank, rank = model.rank();
  RatMatrix m(rho_y + rank, model.picard_rank + rank);
  for (std::size_t i = 0; i < rho_y; ++i)
    for (std::size_t j = 0; j < model.picard_rank; ++j)
      m.at(i, j) = rd.divisor_map[i][j];
  for (std::size_t k = 0; k < rank; ++k) m.at(rho_y + k, model.picard_rank + k) = 1;
  return m;
}

inline RatMatrix phi_tilde_matrix(const VarietyModel& model) {
  // (v_1..v_n, D, lambda) -> (v_2..v_n, psi(D), lambda)
  const auto& rd = *model.restriction;
  std::size_t n = model.dimension, rho = model.picard_rank;
  std::size_t rho_y = rd.model->picard_rank, rank = model.rank();
  RatMatrix m(n - 1 + rho_y + rank, n + rho + rank);
  for (std::size_t i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
  for (std::size_t i = 0; i < rho_y; ++i)
    for (std::size_t j = 0; j < rho; ++j) m.at(n - 1 + i, n + j) = rd.divisor_map[i][j];
  for (std::size_t k = 0; k < rank; ++k) m.at(n - 1 + rho_y + k, n + rho + k) = 1;
  return m;
}

inline RatMatrix pi_matrix(const VarietyModel& y) {
  // (a, E, lambda) -> (E, lambda) on the Y model
  std::size_t n = y.dimension, rho = y.picard_rank, rank = y.rank();
  RatMatrix m(rho + rank, n + rho + rank);
  for (std::size_t i = 0; i < rho + rank; ++i) m.at(i, n + i) = 1;
  return m;
}
}  // namespace detail

// The three restriction-cone identities, checked as exact cone equalities
// between the point-generated side and the operation-generated side.
inline Report check_cone_lemmas(const VarietyModel& model, int bound) {
  Report rep;
  rep.check = "cone-lemmas";
  rep.model = model.name;
  if (model.r() == 0) {
    rep.add("skipped", true, "no boundary divisor (r = 0)");
    return rep;
  }
  const VarietyModel& y = *model.restriction->model;
  JKData jk = build_J_K(model, bound);
  JYKYData jyky = build_JY_KY(model, bound);
  TildeData tilde = build_tilde_sets(model, bound);
  const Cone& ky = jyky.KY;

  Cone phi_k = linear_image(jk.K, detail::phi_matrix(model));
  rep.add("K_Y = phi(K)", equal(ky, phi_k), detail::rays_to_string(ky));

  bool zero_first = true;
  for (const auto& p : tilde.J_tilde) zero_first &= (p.value[0] == 0);
  rep.add("members of J-tilde have first value coordinate 0", zero_first,
          std::to_string(tilde.J_tilde.size()) + " points");

  int y_bound = std::max(bound, y.stabilization_bound + 2);
  Cone delta_y = moment_cone(y, y_bound);
  Cone rhs_tky = intersect(delta_y, linear_preimage(ky, detail::pi_matrix(y)));
  rep.add("K-tilde_Y = Delta-tilde(Y) intersect pi^{-1}(K_Y)",
          equal(tilde.KY_tilde, rhs_tky), detail::rays_to_string(tilde.KY_tilde));

  // product cone ({0} x R_{>=0}^{n-1}) x K
  std::size_t n = model.dimension, rho = model.picard_rank, rank = model.rank();
  std::vector<IntVec> normals, equations;
  {
    IntVec e(n + rho + rank, 0);
    e[0] = 1;
    equations.push_back(e);
    for (std::size_t i = 1; i < n; ++i) {
      IntVec v(n + rho + rank, 0);
      v[i] = 1;
      normals.push_back(v);
    }
    for (const auto& nk : jk.K.normals) {
      IntVec v(n + rho + rank, 0);
      for (std::size_t j = 0; j < rho + rank; ++j) v[n + j] = nk[j];
      normals.push_back(v);
    }
    for (const auto& ek : jk.K.equations) {
      IntVec v(n + rho + rank, 0);
      for (std::size_t j = 0; j < rho + rank; ++j) v[n + j] = ek[j];
      equations.push_back(v);
    }
  }
  Cone product = cone_from_inequalities(n + rho + rank, normals, equations);
  RatMatrix phi_tilde = detail::phi_tilde_matrix(model);
  Cone rhs_tk = intersect(product, linear_preimage(tilde.KY_tilde, phi_tilde));
  rep.add("K-tilde = ({0} x R^{n-1}_{>=0} x K) intersect phi-tilde^{-1}(K-tilde_Y)",
          equal(tilde.K_tilde, rhs_tk), detail::rays_to_string(tilde.K_tilde));

  rep.add("K-tilde_Y = phi-tilde(K-tilde)",
          equal(tilde.KY_tilde, linear_image(tilde.K_tilde, phi_tilde)));
  return rep;
}

// Inductive generator formula: the global moment cone is generated by the
// generators of K-tilde plus the boundary ray ((1,0,...,0), [E_1], 0).
inline Report check_inductive_formula(const VarietyModel& model, int bound) {
  Report rep;
  rep.check = "inductive";
  rep.model = model.name;
  if (model.r() == 0) {
    rep.add("skipped", true, "no boundary divisor (r = 0)");
    return rep;
  }
  TildeData tilde = build_tilde_sets(model, bound);
  std::size_t n = model.dimension, rho = model.picard_rank, rank = model.rank();
  IntVec extra(n + rho + rank, 0);
  extra[0] = 1;
  for (std::size_t j = 0; j < rho; ++j) extra[n + j] = model.boundary[0].cls[j];
  std::vector<IntVec> gens = tilde.K_tilde.rays;
  gens.push_back(extra);
  Cone formula = cone_from_rays(n + rho + rank, gens, tilde.K_tilde.lineality);
  int full_bound = std::max(bound, model.stabilization_bound);
  Cone enumerated = moment_cone(model, full_bound);
  rep.add("Delta-tilde = cone(K-tilde generators + boundary ray)",
          equal(formula, enumerated), detail::rays_to_string(enumerated));
  return rep;
}

// Stabilization of the global cones along a list of bounds: from the
// model's recorded threshold on, enlarging the grid adds no new rays.
inline Report check_stabilization(const VarietyModel& model, std::vector<int> bounds = {}) {
  Report rep;
  rep.check = "stabilization";
  rep.model = model.name;
  if (bounds.empty())
    bounds = {model.stabilization_bound, model.stabilization_bound + 2};
  std::sort(bounds.begin(), bounds.end());
  std::vector<Cone> moment, okounkov;
  for (int b : bounds) {
    moment.push_back(moment_cone(model, b));
    okounkov.push_back(okounkov_cone(model, b));
  }
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    if (bounds[i] < model.stabilization_bound) continue;
    rep.add("moment cone stable " + std::to_string(bounds[i]) + " -> " +
                std::to_string(bounds[i + 1]),
            equal(moment[i], moment[i + 1]));
    rep.add("Okounkov cone stable " + std::to_string(bounds[i]) + " -> " +
                std::to_string(bounds[i + 1]),
            equal(okounkov[i], okounkov[i + 1]));
  }
  rep.add("stabilized moment cone rays", true, detail::rays_to_string(moment.back()));
  rep.add("stabilized Okounkov cone rays", true, detail::rays_to_string(okounkov.back()));
  return rep;
}

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "validate", "sepvalues",  "semigroup", "p-isomorphism",
      "cone-lemmas", "inductive", "stabilization"};
  return names;
}

struct VerifyOptions {
  int bound = 4;
  int closure_bound = 3;  // semigroup closure multiplies sections, so degrees double
  int samples = 50;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> checks;  // empty: all
};

inline std::vector<Report> run_checks(const VarietyModel& model, const VerifyOptions& opt) {
  std::vector<std::string> selected = opt.checks.empty() ? check_names() : opt.checks;
  std::vector<Report> out;
  for (const auto& name : selected) {
    bool known = false;
    for (const auto& k : check_names()) known |= (k == name);
    if (!known) throw DomainError("unknown check '" + name + "'");
    try {
      if (name == "validate")
        out.push_back(validate_model(model));
      else if (name == "sepvalues")
        out.push_back(check_sepvalues(model, opt.bound, opt.seed));
      else if (name == "semigroup")
        out.push_back(check_semigroup(model, std::min(opt.bound, opt.closure_bound),
                                      opt.samples, opt.seed));
      else if (name == "p-isomorphism")
        out.push_back(check_p_isomorphism(model, opt.bound, opt.seed));
      else if (name == "cone-lemmas")
        out.push_back(check_cone_lemmas(model, opt.bound));
      else if (name == "inductive")
        out.push_back(check_inductive_formula(model, opt.bound));
      else if (name == "stabilization")
        out.push_back(check_stabilization(model));
    } catch (const std::exception& ex) {
      Report rep;
      rep.check = name;
      rep.model = model.name;
      rep.add("completed without structural errors", false, ex.what());
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace okounkov
