#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "okounkov/matrix.hpp"

using namespace okounkov;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> entry(-3, 3);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
  return m;
}

}  // namespace

TEST_CASE("row echelon examples") {
  SECTION("identity") {
    Echelon e = row_echelon(RatMatrix::identity(3));
    REQUIRE(e.rank == 3);
    REQUIRE(e.pivots == std::vector<std::size_t>{0, 1, 2});
    REQUIRE(e.mat == RatMatrix::identity(3));
  }
  SECTION("zero") {
    Echelon e = row_echelon(RatMatrix(2, 2));
    REQUIRE(e.rank == 0);
    REQUIRE(e.pivots.empty());
    REQUIRE(e.mat == RatMatrix(2, 2));
  }
  SECTION("dependent rows") {
    RatMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    Echelon e = row_echelon(m);
    REQUIRE(e.rank == 1);
    REQUIRE(e.pivots == std::vector<std::size_t>{0});
  }
}

TEST_CASE("row echelon preserves the row space") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix m = random_matrix(rng, 4, 5);
    Echelon e = row_echelon(m);
    std::vector<RatVec> orig, ech;
    for (std::size_t i = 0; i < 4; ++i) orig.push_back(m.row(i));
    for (std::size_t i = 0; i < e.rank; ++i) ech.push_back(e.mat.row(i));
    for (const auto& r : ech) REQUIRE(express_in_span(orig, r).has_value());
    for (const auto& r : orig) REQUIRE(express_in_span(ech, r).has_value());
  }
}

TEST_CASE("kernel basis annihilates and has complementary dimension") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix m = random_matrix(rng, 3, 5);
    auto kernel = kernel_basis(m);
    Echelon e = row_echelon(m);
    REQUIRE(kernel.size() == 5 - e.rank);
    for (const auto& k : kernel) {
      RatVec img = m.apply(k);
      for (const auto& x : img) REQUIRE(x == 0);
    }
  }
}

TEST_CASE("express_in_span answers membership exactly") {
  std::vector<RatVec> gens = {{1, 0, 1}, {0, 1, 1}};
  auto c = express_in_span(gens, {2, 3, 5});
  REQUIRE(c.has_value());
  REQUIRE((*c)[0] == 2);
  REQUIRE((*c)[1] == 3);
  REQUIRE(!express_in_span(gens, {0, 0, 1}).has_value());
}
