#include <catch2/catch_amalgamated.hpp>

#include "okounkov/catalog.hpp"
#include "okounkov/semigroup.hpp"
#include "okounkov/serialize.hpp"

using namespace okounkov;

TEST_CASE("integer vectors survive arbitrary precision as strings") {
  IntVec big = {Integer("1208925819614629174706176"), Integer("-3"), Integer(0)};
  REQUIRE(int_vec_from_json(int_vec_to_json(big)) == big);
  RatVec q = {Rational("22/7"), Rational("-1/1208925819614629174706176")};
  REQUIRE(rat_vec_from_json(rat_vec_to_json(q)) == q);
}

TEST_CASE("cones round-trip through JSON") {
  Cone c = moment_cone(*load_model("pgl2_wonderful"), 2);
  json j = cone_to_json(c);
  Cone back = cone_from_json(j);
  REQUIRE(back.dim == c.dim);
  REQUIRE(back.rays == c.rays);
  REQUIRE(back.lineality == c.lineality);
  REQUIRE(back.normals == c.normals);
  REQUIRE(back.equations == c.equations);
  REQUIRE(cone_to_json(back) == j);
}

TEST_CASE("tampered cone documents are rejected") {
  Cone c = moment_cone(*load_model("p1_sl2"), 1);
  json j = cone_to_json(c);
  j["rays"][0][0] = "-5";  // now violates a facet
  REQUIRE_THROWS_AS(cone_from_json(j), InternalError);
}

TEST_CASE("moment point sets round-trip through JSON") {
  MomentEnumeration e = enumerate_moment_semigroup(*load_model("pgl2_wonderful"), 2);
  json j = moment_points_to_json(e.points);
  REQUIRE(j["blocks"] == json({"value", "divisor", "weight"}));
  REQUIRE(moment_points_from_json(j) == e.points);
}

TEST_CASE("polytopes round-trip through JSON") {
  Polytope p;
  p.dim = 2;
  p.vertices = {{0, 0}, {Rational(1, 2), 0}, {0, 1}};
  json j = polytope_to_json(p);
  Polytope back = polytope_from_json(j);
  REQUIRE(back.dim == p.dim);
  REQUIRE(back.vertices == p.vertices);
}

TEST_CASE("reports serialize with all entries") {
  Report r;
  r.check = "demo";
  r.model = "p1_sl2";
  r.add("ok entry", true, "detail");
  r.add("bad entry", false);
  json j = report_to_json(r);
  REQUIRE(j["check"] == "demo");
  REQUIRE(j["passed"] == false);
  REQUIRE(j["entries"].size() == 2);
  REQUIRE(j["entries"][0]["label"] == "ok entry");
}

TEST_CASE("serialized documents are deterministic") {
  auto m = load_model("p1xp1_sl2sl2");
  json a = cone_to_json(moment_cone(*m, 2));
  json b = cone_to_json(moment_cone(*m, 2));
  REQUIRE(a.dump() == b.dump());
}
