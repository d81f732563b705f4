#include <catch2/catch_amalgamated.hpp>

#include "okounkov/catalog.hpp"
#include "okounkov/poly_io.hpp"
#include "okounkov/validate.hpp"

using namespace okounkov;

TEST_CASE("catalog models load with the documented shape") {
  auto pgl2 = load_model("pgl2_wonderful");
  REQUIRE(pgl2->r() == 1);
  REQUIRE(pgl2->dimension == 3);
  REQUIRE(pgl2->picard_rank == 1);
  REQUIRE(pgl2->group == Group::SL2xSL2);

  auto p1 = load_model("p1_sl2");
  REQUIRE(p1->dimension == 1);
  REQUIRE(p1->r() == 0);

  REQUIRE_THROWS_AS(load_model("p17_e8"), DomainError);
}

TEST_CASE("the chart parametrization kills the determinant") {
  auto m = load_model("pgl2_wonderful");
  Polynomial det = parse_poly("a*d - b*c", m->coordinates);
  REQUIRE(det.substitute(m->chart_map).is_zero());
}

TEST_CASE("section space bases") {
  auto pgl2 = load_model("pgl2_wonderful");
  REQUIRE(section_space_basis(*pgl2, {1}).size() == 4);
  REQUIRE(section_space_basis(*pgl2, {2}).size() == 10);
  auto p1xp1 = load_model("p1xp1_sl2sl2");
  REQUIRE(section_space_basis(*p1xp1, {1, 2}).size() == 6);
  REQUIRE(section_space_basis(*p1xp1, {-1, 2}).empty());
  REQUIRE(is_effective(*p1xp1, {0, 0}));
  REQUIRE(!is_effective(*load_model("p1_sl2"), {-1}));
}

TEST_CASE("every catalog model validates") {
  for (const auto& name : catalog_names()) {
    Report rep = validate_model(*load_model(name));
    INFO(rep.text());
    REQUIRE(rep.passed);
  }
}

TEST_CASE("a corrupted boundary section fails validation") {
  nlohmann::json j = nlohmann::json::parse(catalog_data::kPgl2Wonderful);
  j["name"] = "pgl2_corrupt";
  j["boundary"][0]["section"] = "a";
  j["boundary"][0]["class"] = nlohmann::json::array({1});
  auto broken = model_from_json(j, catalog_resolver);
  Report rep = validate_model(*broken);
  REQUIRE(!rep.passed);
  bool invariance_failed = false;
  for (const auto& e : rep.entries)
    if (e.label == "s_1 G-invariant" && !e.passed) invariance_failed = true;
  REQUIRE(invariance_failed);
}

TEST_CASE("model records round-trip through JSON") {
  for (const auto& name : catalog_names()) {
    auto m = load_model(name);
    nlohmann::json j = model_to_json(*m);
    auto back = model_from_json(j, catalog_resolver);
    REQUIRE(model_to_json(*back) == j);
  }
}

TEST_CASE("divisor grid enumerates the box with the origin first") {
  auto grid = divisor_grid(2, 1);
  REQUIRE(grid == std::vector<DivisorClass>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  REQUIRE(divisor_grid(1, 3).size() == 4);
  REQUIRE(divisor_grid(2, -1).empty());
}
