#pragma once
// JSON forms of the computed artifacts. Every integer and rational is a
// decimal string, so documents survive arbitrary precision in any consumer
// language; parse(serialize(x)) == x for cones, point sets and polytopes.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "okounkov/cone.hpp"
#include "okounkov/polytope.hpp"
#include "okounkov/report.hpp"
#include "okounkov/semigroup.hpp"

namespace okounkov {

using json = nlohmann::json;

inline json int_vec_to_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline IntVec int_vec_from_json(const json& a) {
  IntVec v;
  for (const auto& s : a) v.emplace_back(Integer(s.get<std::string>()));
  return v;
}

inline json rat_vec_to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline RatVec rat_vec_from_json(const json& a) {
  RatVec v;
  for (const auto& s : a) v.push_back(parse_rational(s.get<std::string>()));
  return v;
}

inline json cone_to_json(const Cone& c) {
  json j;
  j["ambient_dimension"] = c.dim;
  j["rays"] = json::array();
  for (const auto& r : c.rays) j["rays"].push_back(int_vec_to_json(r));
  j["lineality"] = json::array();
  for (const auto& l : c.lineality) j["lineality"].push_back(int_vec_to_json(l));
  j["facets"] = json::array();
  for (const auto& n : c.normals) j["facets"].push_back(int_vec_to_json(n));
  j["equations"] = json::array();
  for (const auto& e : c.equations) j["equations"].push_back(int_vec_to_json(e));
  return j;
}

inline Cone cone_from_json(const json& j) {
  Cone c;
  c.dim = j.at("ambient_dimension").get<std::size_t>();
  for (const auto& r : j.at("rays")) c.rays.push_back(int_vec_from_json(r));
  for (const auto& l : j.at("lineality")) c.lineality.push_back(int_vec_from_json(l));
  for (const auto& n : j.at("facets")) c.normals.push_back(int_vec_from_json(n));
  for (const auto& e : j.at("equations")) c.equations.push_back(int_vec_from_json(e));
  detail::check_dual_pair(c);
  return c;
}

namespace detail {
inline json int_block_to_json(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(std::to_string(x));
  return a;
}
inline std::vector<int> int_block_from_json(const json& a) {
  std::vector<int> v;
  for (const auto& s : a) v.push_back(std::stoi(s.get<std::string>()));
  return v;
}
}  // namespace detail

// Points are arrays of coordinate blocks; "blocks" names them in order.
inline json moment_points_to_json(const std::vector<MomentPoint>& points) {
  json j;
  j["blocks"] = {"value", "divisor", "weight"};
  j["points"] = json::array();
  for (const auto& p : points)
    j["points"].push_back({detail::int_block_to_json(p.value),
                           detail::int_block_to_json(p.divisor),
                           detail::int_block_to_json(p.weight)});
  return j;
}

inline std::vector<MomentPoint> moment_points_from_json(const json& j) {
  std::vector<MomentPoint> out;
  for (const auto& p : j.at("points"))
    out.push_back({detail::int_block_from_json(p.at(0)),
                   detail::int_block_from_json(p.at(1)),
                   detail::int_block_from_json(p.at(2))});
  return out;
}

inline json okounkov_points_to_json(const std::vector<OkounkovPoint>& points) {
  json j;
  j["blocks"] = {"value", "divisor"};
  j["points"] = json::array();
  for (const auto& p : points)
    j["points"].push_back(
        {detail::int_block_to_json(p.value), detail::int_block_to_json(p.divisor)});
  return j;
}

inline json pairs_to_json(const std::vector<std::pair<DivisorClass, Weight>>& pairs) {
  json j;
  j["blocks"] = {"divisor", "weight"};
  j["points"] = json::array();
  for (const auto& [d, w] : pairs)
    j["points"].push_back(
        {detail::int_block_to_json(d), detail::int_block_to_json(w)});
  return j;
}

inline json polytope_to_json(const Polytope& p) {
  json j;
  j["ambient_dimension"] = p.dim;
  j["vertices"] = json::array();
  for (const auto& v : p.vertices) j["vertices"].push_back(rat_vec_to_json(v));
  return j;
}

inline Polytope polytope_from_json(const json& j) {
  Polytope p;
  p.dim = j.at("ambient_dimension").get<std::size_t>();
  for (const auto& v : j.at("vertices")) p.vertices.push_back(rat_vec_from_json(v));
  return p;
}

inline json report_to_json(const Report& r) {
  json j;
  j["check"] = r.check;
  j["model"] = r.model;
  j["scope"] = r.scope;
  j["passed"] = r.passed;
  j["entries"] = json::array();
  for (const auto& e : r.entries)
    j["entries"].push_back({{"label", e.label}, {"passed", e.passed}, {"detail", e.detail}});
  return j;
}

}  // namespace okounkov
