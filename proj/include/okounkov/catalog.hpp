#pragma once
// The shipped catalog. Each entry is a JSON record in the same schema used
// for external model files, so the catalog models double as documentation
// of that schema (docs/schemas/model.schema.json).
//
// Conventions shared by all entries:
//   - coordinate weights are in fundamental-weight coordinates;
//   - the chart substitution parametrizes the big cell of the closed orbit
//     around a torus-fixed point, and the chart-variable order is the one
//     read by the lexicographic valuation;
//   - boundary sections are invariant under all raise/lower operators.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "okounkov/model.hpp"

namespace okounkov {

namespace catalog_data {

// X = P^1, G = SL2. Sections of O(d) form the irreducible module of
// highest weight d with highest-weight vector x0^d.
inline constexpr const char* kP1Sl2 = R"JSON({
  "name": "p1_sl2",
  "group": "SL2",
  "dimension": 1,
  "picard_rank": 1,
  "coordinates": ["x0", "x1"],
  "coordinate_weights": [[1], [-1]],
  "coordinate_degrees": [[1], [1]],
  "raise": [["0", "x0"]],
  "lower": [["x1", "0"]],
  "boundary": [],
  "chart_variables": ["u"],
  "chart": ["1", "u"],
  "stabilization_bound": 1,
  "degree_checks": [
    {"divisor": [1], "degree": 1},
    {"divisor": [2], "degree": 2},
    {"divisor": [3], "degree": 3}
  ]
})JSON";

// X = P^1 x P^1, G = SL2 x SL2; sections of O(d,e) are V(d) (x) V(e).
// This is also the closed orbit of the pgl2_wonderful model.
inline constexpr const char* kP1xP1 = R"JSON({
  "name": "p1xp1_sl2sl2",
  "group": "SL2xSL2",
  "dimension": 2,
  "picard_rank": 2,
  "coordinates": ["x0", "x1", "y0", "y1"],
  "coordinate_weights": [[1, 0], [-1, 0], [0, 1], [0, -1]],
  "coordinate_degrees": [[1, 0], [1, 0], [0, 1], [0, 1]],
  "raise": [["0", "x0", "0", "0"], ["0", "0", "0", "y0"]],
  "lower": [["x1", "0", "0", "0"], ["0", "0", "y1", "0"]],
  "boundary": [],
  "chart_variables": ["u", "v"],
  "chart": ["1", "u", "1", "v"],
  "stabilization_bound": 1,
  "degree_checks": [
    {"divisor": [1, 1], "degree": 2},
    {"divisor": [2, 3], "degree": 12}
  ]
})JSON";

// X = P^2, G = SL3; exercises a vertical flag of length two. The
// coordinates carry the weights of the standard representation, so
// sections of O(d) form V(d, 0).
inline constexpr const char* kP2Sl3 = R"JSON({
  "name": "p2_sl3",
  "group": "SL3",
  "dimension": 2,
  "picard_rank": 1,
  "coordinates": ["x0", "x1", "x2"],
  "coordinate_weights": [[1, 0], [-1, 1], [0, -1]],
  "coordinate_degrees": [[1], [1], [1]],
  "raise": [["0", "x0", "0"], ["0", "0", "x1"]],
  "lower": [["x1", "0", "0"], ["0", "x2", "0"]],
  "boundary": [],
  "chart_variables": ["u", "v"],
  "chart": ["1", "u", "v"],
  "stabilization_bound": 1,
  "degree_checks": [
    {"divisor": [1], "degree": 1},
    {"divisor": [2], "degree": 4},
    {"divisor": [3], "degree": 9}
  ]
})JSON";

// X = P^3 as the space of 2x2 matrices, G = SL2 x SL2 by left/right
// translation. The boundary is the determinant quadric, whose complement
// is the open orbit PGL2; the closed orbit is the Segre quadric P^1 x P^1,
// parametrized on the big cell by (a,b,c,d) -> (1, v, u, u*v).
inline constexpr const char* kPgl2Wonderful = R"JSON({
  "name": "pgl2_wonderful",
  "group": "SL2xSL2",
  "dimension": 3,
  "picard_rank": 1,
  "coordinates": ["a", "b", "c", "d"],
  "coordinate_weights": [[1, 1], [1, -1], [-1, 1], [-1, -1]],
  "coordinate_degrees": [[1], [1], [1], [1]],
  "raise": [["0", "0", "a", "b"], ["0", "a", "0", "c"]],
  "lower": [["c", "d", "0", "0"], ["b", "0", "d", "0"]],
  "boundary": [{"section": "a*d - b*c", "class": [2]}],
  "chart_variables": ["u", "v"],
  "chart": ["1", "v", "u", "u*v"],
  "restriction": {
    "model": "p1xp1_sl2sl2",
    "images": ["x0*y0", "x0*y1", "x1*y0", "x1*y1"],
    "divisor_map": [[1], [1]]
  },
  "stabilization_bound": 2,
  "degree_checks": [
    {"divisor": [1], "degree": 1},
    {"divisor": [2], "degree": 8}
  ]
})JSON";

}  // namespace catalog_data

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"p1_sl2", "p1xp1_sl2sl2", "p2_sl3",
                                                 "pgl2_wonderful"};
  return names;
}

inline std::shared_ptr<const VarietyModel> load_model(const std::string& name);

// Resolver used for restriction references; fixture files may only point
// at catalog entries.
inline std::shared_ptr<const VarietyModel> catalog_resolver(const std::string& name) {
  return load_model(name);
}

inline std::shared_ptr<const VarietyModel> load_model(const std::string& name) {
  static std::map<std::string, std::shared_ptr<const VarietyModel>> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  const char* text = nullptr;
  if (name == "p1_sl2")
    text = catalog_data::kP1Sl2;
  else if (name == "p1xp1_sl2sl2")
    text = catalog_data::kP1xP1;
  else if (name == "p2_sl3")
    text = catalog_data::kP2Sl3;
  else if (name == "pgl2_wonderful")
    text = catalog_data::kPgl2Wonderful;
  else
    throw DomainError("unknown model '" + name + "'");
  auto model = model_from_json(nlohmann::json::parse(text), catalog_resolver);
  cache.emplace(name, model);
  return model;
}

}  // namespace okounkov
