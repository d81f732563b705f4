#pragma once
// Variety models. A model is a declarative record: coordinates with
// weights and multidegrees, the Chevalley action, boundary divisors with
// their invariant defining sections, a big-cell chart of the closed orbit
// with an ordered variable list, and (when there is a boundary) the
// restriction data onto the first flag subvariety. New catalog entries are
// data, not code.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "okounkov/poly_io.hpp"
#include "okounkov/polynomial.hpp"
#include "okounkov/rational.hpp"
#include "okounkov/weight.hpp"

namespace okounkov {

using DivisorClass = std::vector<int>;  // shares componentwise add with Weight

inline std::string divisor_to_string(const DivisorClass& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

enum class Group { SL2, SL2xSL2, SL3 };

inline std::size_t group_rank(Group g) { return g == Group::SL2 ? 1 : 2; }

inline std::string group_name(Group g) {
  switch (g) {
    case Group::SL2: return "SL2";
    case Group::SL2xSL2: return "SL2xSL2";
    case Group::SL3: return "SL3";
  }
  throw InternalError("unknown group");
}

inline std::vector<Weight> simple_roots_of(Group g) {
  switch (g) {
    case Group::SL2: return {{2}};
    case Group::SL2xSL2: return {{2, 0}, {0, 2}};
    case Group::SL3: return {{2, -1}, {-1, 2}};
  }
  throw InternalError("unknown group");
}

inline Integer weyl_dimension(Group g, const Weight& w) {
  switch (g) {
    case Group::SL2:
      return Integer(w[0] + 1);
    case Group::SL2xSL2:
      return Integer(w[0] + 1) * Integer(w[1] + 1);
    case Group::SL3:
      return Integer(w[0] + 1) * Integer(w[1] + 1) * Integer(w[0] + w[1] + 2) / 2;
  }
  throw InternalError("unknown group");
}

struct BoundaryDivisor {
  Polynomial section;  // G-invariant defining section s_i
  DivisorClass cls;
};

struct VarietyModel;

// Restriction onto Y_1, the first boundary divisor: coordinate images in
// the Y model's coordinates, and the divisor-class map psi.
struct RestrictionData {
  std::shared_ptr<const VarietyModel> model;
  std::vector<Polynomial> images;
  std::vector<std::vector<int>> divisor_map;  // rho_Y x rho
};

struct VarietyModel {
  std::string name;
  Group group = Group::SL2;
  std::size_t dimension = 0;
  std::size_t picard_rank = 0;
  std::vector<std::string> coordinates;
  std::vector<DivisorClass> coordinate_degrees;
  ChevalleyAction action;
  std::vector<BoundaryDivisor> boundary;
  std::vector<std::string> chart_variables;  // ordered: backs the lex valuation
  std::vector<Polynomial> chart_map;         // coordinate -> polynomial in chart vars
  std::optional<RestrictionData> restriction;
  int stabilization_bound = 1;
  std::vector<std::pair<DivisorClass, Integer>> degree_checks;

  std::size_t r() const { return boundary.size(); }
  std::size_t rank() const { return action.rank; }
  std::size_t num_coords() const { return coordinates.size(); }

  std::optional<DivisorClass> multidegree(const Polynomial& p) const {
    std::optional<DivisorClass> deg;
    for (const auto& [e, c] : p.terms()) {
      DivisorClass d(picard_rank, 0);
      for (std::size_t j = 0; j < e.size(); ++j)
        for (std::size_t k = 0; k < picard_rank; ++k)
          d[k] += static_cast<int>(e[j]) * coordinate_degrees[j][k];
      if (!deg)
        deg = d;
      else if (*deg != d)
        return std::nullopt;
    }
    return deg;
  }

  DivisorClass psi(const DivisorClass& d) const {
    if (!restriction) throw DomainError("no boundary divisor");
    const auto& m = restriction->divisor_map;
    DivisorClass out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) out[i] += m[i][j] * d[j];
    return out;
  }
};

namespace detail {
inline void enumerate_exponents(const VarietyModel& model, std::size_t coord,
                                DivisorClass remaining, Exponents& current,
                                std::vector<Exponents>& out) {
  auto nonneg = [](const DivisorClass& d) {
    for (int x : d)
      if (x < 0) return false;
    return true;
  };
  if (!nonneg(remaining)) return;
  if (coord == model.num_coords()) {
    for (int x : remaining)
      if (x != 0) return;
    out.push_back(current);
    return;
  }
  const DivisorClass& g = model.coordinate_degrees[coord];
  bool zero_degree = true;
  for (int x : g) zero_degree &= (x == 0);
  if (zero_degree) throw InternalError("coordinate with zero multidegree unsupported");
  DivisorClass rem = remaining;
  for (unsigned e = 0;; ++e) {
    current[coord] = e;
    enumerate_exponents(model, coord + 1, rem, current, out);
    bool fits = true;
    for (std::size_t k = 0; k < rem.size(); ++k) {
      rem[k] -= g[k];
      fits &= (rem[k] >= 0);
    }
    if (!fits) break;
  }
  current[coord] = 0;
}
}  // namespace detail

// Monomial basis of H^0(X, O(D)): all exponent vectors of multidegree D.
// Empty exactly when D is not effective.
inline std::vector<Exponents> section_space_basis(const VarietyModel& model,
                                                  const DivisorClass& divisor) {
  if (divisor.size() != model.picard_rank)
    throw DomainError("divisor class has wrong rank for model " + model.name);
  std::vector<Exponents> out;
  Exponents current(model.num_coords(), 0);
  detail::enumerate_exponents(model, 0, divisor, current, out);
  return out;
}

inline bool is_effective(const VarietyModel& model, const DivisorClass& divisor) {
  return !section_space_basis(model, divisor).empty();
}

// The box [0, bound]^rho, origin first, in lexicographic order.
inline std::vector<DivisorClass> divisor_grid(std::size_t rho, int bound) {
  std::vector<DivisorClass> grid;
  if (bound < 0) return grid;
  DivisorClass d(rho, 0);
  for (;;) {
    grid.push_back(d);
    std::size_t k = rho;
    while (k > 0 && d[k - 1] == bound) d[--k] = 0;
    if (k == 0) break;
    ++d[k - 1];
  }
  std::sort(grid.begin(), grid.end());
  return grid;
}

// --- JSON loading ------------------------------------------------------

using ModelResolver =
    std::function<std::shared_ptr<const VarietyModel>(const std::string&)>;

inline std::shared_ptr<const VarietyModel> model_from_json(const nlohmann::json& j,
                                                           const ModelResolver& resolve) {
  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) throw DomainError(std::string("model record missing '") + key + "'");
    return j.at(key);
  };
  auto model = std::make_shared<VarietyModel>();
  model->name = require("name").get<std::string>();
  std::string g = require("group").get<std::string>();
  if (g == "SL2")
    model->group = Group::SL2;
  else if (g == "SL2xSL2")
    model->group = Group::SL2xSL2;
  else if (g == "SL3")
    model->group = Group::SL3;
  else
    throw DomainError("unknown group '" + g + "'");
  model->dimension = require("dimension").get<std::size_t>();
  model->picard_rank = require("picard_rank").get<std::size_t>();
  model->coordinates = require("coordinates").get<std::vector<std::string>>();
  const std::size_t nc = model->coordinates.size();

  model->coordinate_degrees.clear();
  for (const auto& row : require("coordinate_degrees"))
    model->coordinate_degrees.push_back(row.get<DivisorClass>());
  if (model->coordinate_degrees.size() != nc)
    throw DomainError("coordinate_degrees length mismatch");

  ChevalleyAction& act = model->action;
  act.rank = group_rank(model->group);
  act.simple_roots = simple_roots_of(model->group);
  for (const auto& row : require("coordinate_weights")) {
    Weight w = row.get<Weight>();
    if (w.size() != act.rank) throw DomainError("coordinate weight has wrong rank");
    act.coordinate_weights.push_back(std::move(w));
  }
  if (act.coordinate_weights.size() != nc)
    throw DomainError("coordinate_weights length mismatch");

  auto read_images = [&](const nlohmann::json& rows) {
    std::vector<std::vector<Polynomial>> ops;
    for (const auto& row : rows) {
      std::vector<Polynomial> images;
      for (const auto& s : row)
        images.push_back(parse_poly(s.get<std::string>(), model->coordinates));
      if (images.size() != nc) throw DomainError("derivation image count mismatch");
      ops.push_back(std::move(images));
    }
    if (ops.size() != act.rank) throw DomainError("derivation operator count mismatch");
    return ops;
  };
  act.raise_images = read_images(require("raise"));
  act.lower_images = read_images(require("lower"));

  if (j.contains("boundary"))
    for (const auto& b : j.at("boundary")) {
      BoundaryDivisor bd;
      bd.section = parse_poly(b.at("section").get<std::string>(), model->coordinates);
      bd.cls = b.at("class").get<DivisorClass>();
      if (bd.cls.size() != model->picard_rank)
        throw DomainError("boundary class has wrong rank");
      model->boundary.push_back(std::move(bd));
    }

  model->chart_variables = require("chart_variables").get<std::vector<std::string>>();
  if (model->chart_variables.size() != model->dimension - model->r())
    throw DomainError("chart variable count must equal dimension - boundary count");
  for (const auto& s : require("chart"))
    model->chart_map.push_back(parse_poly(s.get<std::string>(), model->chart_variables));
  if (model->chart_map.size() != nc) throw DomainError("chart map length mismatch");

  if (model->r() > 0) {
    const auto& rj = require("restriction");
    RestrictionData rd;
    rd.model = resolve(rj.at("model").get<std::string>());
    if (!rd.model) throw DomainError("unknown restriction model");
    for (const auto& s : rj.at("images"))
      rd.images.push_back(parse_poly(s.get<std::string>(), rd.model->coordinates));
    if (rd.images.size() != nc) throw DomainError("restriction image count mismatch");
    for (const auto& row : rj.at("divisor_map"))
      rd.divisor_map.push_back(row.get<std::vector<int>>());
    if (rd.divisor_map.size() != rd.model->picard_rank)
      throw DomainError("divisor_map has wrong shape");
    for (const auto& row : rd.divisor_map)
      if (row.size() != model->picard_rank) throw DomainError("divisor_map has wrong shape");
    model->restriction = std::move(rd);
  }

  model->stabilization_bound = j.value("stabilization_bound", 1);
  if (j.contains("degree_checks"))
    for (const auto& dc : j.at("degree_checks"))
      model->degree_checks.emplace_back(dc.at("divisor").get<DivisorClass>(),
                                        Integer(dc.at("degree").get<long long>()));
  return model;
}

inline nlohmann::json model_to_json(const VarietyModel& m) {
  nlohmann::json j;
  j["name"] = m.name;
  j["group"] = group_name(m.group);
  j["dimension"] = m.dimension;
  j["picard_rank"] = m.picard_rank;
  j["coordinates"] = m.coordinates;
  j["coordinate_degrees"] = m.coordinate_degrees;
  j["coordinate_weights"] = m.action.coordinate_weights;
  auto dump_images = [&](const std::vector<std::vector<Polynomial>>& ops) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& op : ops) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& p : op) row.push_back(poly_to_string(p, m.coordinates));
      rows.push_back(row);
    }
    return rows;
  };
  j["raise"] = dump_images(m.action.raise_images);
  j["lower"] = dump_images(m.action.lower_images);
  j["boundary"] = nlohmann::json::array();
  for (const auto& b : m.boundary)
    j["boundary"].push_back({{"section", poly_to_string(b.section, m.coordinates)},
                             {"class", b.cls}});
  j["chart_variables"] = m.chart_variables;
  j["chart"] = nlohmann::json::array();
  for (const auto& p : m.chart_map)
    j["chart"].push_back(poly_to_string(p, m.chart_variables));
  if (m.restriction) {
    nlohmann::json rj;
    rj["model"] = m.restriction->model->name;
    rj["images"] = nlohmann::json::array();
    for (const auto& p : m.restriction->images)
      rj["images"].push_back(poly_to_string(p, m.restriction->model->coordinates));
    rj["divisor_map"] = m.restriction->divisor_map;
    j["restriction"] = rj;
  }
  j["stabilization_bound"] = m.stabilization_bound;
  j["degree_checks"] = nlohmann::json::array();
  for (const auto& [d, deg] : m.degree_checks)
    j["degree_checks"].push_back(
        {{"divisor", d}, {"degree", deg.template convert_to<long long>()}});
  return j;
}

}  // namespace okounkov
