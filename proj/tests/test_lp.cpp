#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "okounkov/lp.hpp"

using namespace okounkov;

TEST_CASE("simplex solves a small bounded program") {
  // min -x  s.t.  x + y = 1, x,y >= 0  ->  x = 1
  LpResult r = solve_lp({{1, 1}}, {1}, {-1, 0});
  REQUIRE(r.status == LpStatus::Optimal);
  REQUIRE(r.objective == -1);
  REQUIRE(r.x[0] == 1);
  REQUIRE(r.x[1] == 0);
}

TEST_CASE("simplex detects unboundedness") {
  // min -x  s.t.  x - y = 0
  LpResult r = solve_lp({{1, -1}}, {0}, {-1, 0});
  REQUIRE(r.status == LpStatus::Unbounded);
}

TEST_CASE("infeasibility comes with a Farkas certificate") {
  // x + y = -1 is infeasible over x,y >= 0
  std::vector<RatVec> a = {{1, 1}};
  RatVec b = {-1};
  LpResult r = solve_lp(a, b, {0, 0});
  REQUIRE(r.status == LpStatus::Infeasible);
  // y^T A <= 0 and y^T b > 0
  Rational yb = 0;
  for (std::size_t i = 0; i < b.size(); ++i) yb += r.farkas[i] * b[i];
  REQUIRE(yb > 0);
  for (std::size_t j = 0; j < 2; ++j) {
    Rational ya = 0;
    for (std::size_t i = 0; i < a.size(); ++i) ya += r.farkas[i] * a[i][j];
    REQUIRE(ya <= 0);
  }
}

TEST_CASE("degenerate program still terminates (Bland)") {
  // Degenerate vertex at the origin with several tight constraints.
  //   min -x1 - x2 s.t. x1 + s1 = 0 is replaced by equalities with slack cols:
  std::vector<RatVec> a = {
      {1, 1, 1, 0, 0},
      {1, 0, 0, 1, 0},
      {0, 1, 0, 0, 1},
  };
  RatVec b = {1, 1, 1};
  LpResult r = solve_lp(a, b, {-1, -1, 0, 0, 0});
  REQUIRE(r.status == LpStatus::Optimal);
  REQUIRE(r.objective == -1);
}

TEST_CASE("random feasibility answers are self-consistent") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<RatVec> a(2, RatVec(4));
    RatVec b(2);
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    for (auto& x : b) x = entry(rng);
    LpResult r = lp_feasible(a, b);
    if (r.status == LpStatus::Optimal) {
      for (std::size_t i = 0; i < 2; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < 4; ++j) s += a[i][j] * r.x[j];
        REQUIRE(s == b[i]);
      }
      for (const auto& x : r.x) REQUIRE(x >= 0);
    } else {
      REQUIRE(r.status == LpStatus::Infeasible);
      Rational yb = 0;
      for (std::size_t i = 0; i < 2; ++i) yb += r.farkas[i] * b[i];
      REQUIRE(yb > 0);
      for (std::size_t j = 0; j < 4; ++j) {
        Rational ya = 0;
        for (std::size_t i = 0; i < 2; ++i) ya += r.farkas[i] * a[i][j];
        REQUIRE(ya <= 0);
      }
    }
  }
}
