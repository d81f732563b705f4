#include <catch2/catch_amalgamated.hpp>

#include "okounkov/polytope.hpp"

using namespace okounkov;

TEST_CASE("slice of the planar orthant at x+y=1 is the unit segment") {
  Cone c = cone_from_rays(2, std::vector<IntVec>{{1, 0}, {0, 1}});
  Polytope p = slice(c, IntVec{1, 1}, Rational(1));
  REQUIRE(p.vertices == std::vector<RatVec>{{0, 1}, {1, 0}});
  REQUIRE(polytope_volume(p) == 1);
}

TEST_CASE("unbounded slice is rejected") {
  Cone c = cone_from_rays(2, std::vector<IntVec>{{1, 0}, {0, 1}});
  REQUIRE_THROWS_AS(slice(c, IntVec{1, 0}, Rational(1)), DomainError);
  Cone line = cone_from_rays(2, std::vector<IntVec>{{1, 0}},
                             std::vector<IntVec>{{0, 1}});
  REQUIRE_THROWS_AS(slice(line, IntVec{1, 0}, Rational(1)), DomainError);
}

TEST_CASE("slice of a line cone is a single point") {
  // {x = y} sliced at x = 2 is the bounded point (2,2).
  Cone line = cone_from_rays(2, std::vector<IntVec>{}, std::vector<IntVec>{{1, 1}});
  Polytope p = slice(line, IntVec{1, 0}, Rational(2));
  REQUIRE(p.vertices == std::vector<RatVec>{{2, 2}});
  REQUIRE(polytope_volume(p) == 1);
  Cone ray = cone_from_rays(2, std::vector<IntVec>{{1, 1}});
  Polytope q = slice(ray, IntVec{1, 0}, Rational(2));
  REQUIRE(q.vertices == std::vector<RatVec>{{2, 2}});
}

TEST_CASE("unit square and triangle volumes") {
  Cone sq = cone_from_rays(
      3, std::vector<IntVec>{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  Polytope square = slice(sq, IntVec{0, 0, 1}, Rational(1));
  REQUIRE(square.vertices.size() == 4);
  REQUIRE(polytope_volume(square) == 1);

  Cone tr = cone_from_rays(3, std::vector<IntVec>{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  Polytope triangle = slice(tr, IntVec{0, 0, 1}, Rational(1));
  REQUIRE(triangle.vertices.size() == 3);
  REQUIRE(polytope_volume(triangle) == Rational(1, 2));
}

TEST_CASE("square pyramid with apex at (1/2,0,0) has volume 1/6") {
  // Cone over the value parts of the five moment-cone rays of the quadric
  // threefold model, sliced at divisor degree 1.
  Cone c = cone_from_rays(4, std::vector<IntVec>{{0, 0, 0, 1},
                                                 {0, 1, 0, 1},
                                                 {0, 0, 1, 1},
                                                 {0, 1, 1, 1},
                                                 {1, 0, 0, 2}});
  Polytope p = slice(c, IntVec{0, 0, 0, 1}, Rational(1));
  REQUIRE(p.vertices.size() == 5);
  RatVec apex = {Rational(1, 2), 0, 0, 1};
  REQUIRE(std::find(p.vertices.begin(), p.vertices.end(), apex) != p.vertices.end());
  REQUIRE(polytope_volume(p) == Rational(1, 6));
}

TEST_CASE("lower-dimensional polytopes are measured in their chart") {
  // Segment from (0,0) to (1,1): primitive direction, length 1.
  Cone c = cone_from_rays(3, std::vector<IntVec>{{0, 0, 1}, {1, 1, 1}});
  Polytope p = slice(c, IntVec{0, 0, 1}, Rational(1));
  REQUIRE(p.vertices == std::vector<RatVec>{{0, 0, 1}, {1, 1, 1}});
  REQUIRE(polytope_volume(p) == 1);
}

TEST_CASE("fractional slice levels are exact") {
  Cone c = cone_from_rays(2, std::vector<IntVec>{{1, 0}, {0, 1}});
  Polytope p = slice(c, IntVec{1, 1}, Rational(1, 2));
  REQUIRE(p.vertices ==
          std::vector<RatVec>{{0, Rational(1, 2)}, {Rational(1, 2), 0}});
  REQUIRE(polytope_volume(p) == Rational(1, 2));
}

TEST_CASE("scaling a slice scales the volume by level^dim") {
  Cone tr = cone_from_rays(3, std::vector<IntVec>{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  for (int m = 1; m <= 4; ++m) {
    Polytope t = slice(tr, IntVec{0, 0, 1}, Rational(m));
    REQUIRE(polytope_volume(t) == Rational(m * m, 2));
  }
}
