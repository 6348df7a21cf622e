#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dio/lattice_set.hpp"
#include "dio/oracle.hpp"
#include "dio/solve3.hpp"
#include "dio/system.hpp"

using namespace dio;

namespace {

Region cube(Int lo, Int hi) {
  Region r;
  r.box = {Interval{lo, hi}, Interval{lo, hi}, Interval{lo, hi}};
  return r;
}

}  // namespace

TEST_CASE("membership fixtures") {
  auto [f3set, t1] = solve3({6, -15, 10, 4});
  CHECK(contains(f3set, {-6, -2, 1}));
  CHECK(!contains(f3set, {-6, -2, 2}));

  auto [line, t2] = solve_system({{6, -4, 3, 30}, {3, 6, -2, 25}});
  CHECK(contains(line, {5, 3, 4}));
  CHECK(!contains(line, {5, 3, 5}));

  SolutionSet3 point = SolutionSet3::lattice({1, 2, 3}, {});
  CHECK(contains(point, {1, 2, 3}));
  CHECK(!contains(point, {1, 2, 4}));

  SolutionSet3 space =
      SolutionSet3::lattice({0, 0, 0}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(contains(space, {-7, 123, 0}));

  CHECK(!contains(SolutionSet3::none(2, 3), {0, 0, 0}));
}

TEST_CASE("enumerate: plane in a cube, then a ball") {
  auto [set, tag] = solve3({1, -3, -4, 0});
  std::vector<Vec3> expected = {{-2, -2, 1}, {-2, 2, -2}, {-1, 1, -1},
                                {0, 0, 0},   {1, -1, 1},  {2, -2, 2},
                                {2, 2, -1}};
  CHECK(enumerate_points(set, cube(-2, 2)) == expected);

  Region with_ball = cube(-2, 2);
  with_ball.ball = Ball{{0, 0, 0}, 4};
  std::vector<Vec3> in_ball = {{-1, 1, -1}, {0, 0, 0}, {1, -1, 1}};
  CHECK(enumerate_points(set, with_ball) == in_ball);
}

TEST_CASE("enumerate: 2x + 3y + 7z = 23 in [-3,3]^3") {
  auto [set, tag] = solve3({2, 3, 7, 23});
  // (2, 4, 1) also lies on the plane but has y = 4, outside the box
  std::vector<Vec3> expected = {{-2, 2, 3}, {0, 3, 2}, {1, 0, 3}, {3, 1, 2}};
  CHECK(enumerate_points(set, cube(-3, 3)) == expected);
  CHECK(!contains(set, {2, 4, 2}));
  CHECK(contains(set, {2, 4, 1}));
}

TEST_CASE("count: ways of paying 80 cents") {
  auto [set, tag] = solve3({2, 1, 5, 16});
  Region region;
  region.box = {Interval{0, 8}, Interval{0, 16}, Interval{0, 3}};
  CHECK(count_points(set, region) == 20);
}

TEST_CASE("count with predicates: arithmetic-progression triples") {
  // x + y + z = 85 and 7x - 10y + 3z = 0
  auto [set, tag] = solve_system({{1, 1, 1, 85}, {7, -10, 3, 0}});
  REQUIRE(set.solvable);
  Region region = cube(1, 85);
  region.predicate = positive_predicate();
  auto pts = enumerate_points(set, region);
  std::vector<Vec3> expected = {{11, 23, 51}, {24, 27, 34}, {37, 31, 17}};
  CHECK(pts == expected);

  region.predicate = triangle_predicate();
  auto tri = enumerate_points(set, region);
  std::vector<Vec3> tri_expected = {{24, 27, 34}, {37, 31, 17}};
  CHECK(tri == tri_expected);
  CHECK(count_points(set, region) == 2);
}

TEST_CASE("every enumerated point is a member") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<Int> coeff(-20, 20);
  for (int i = 0; i < 200; ++i) {
    Equation3 eq{coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
    auto [set, tag] = solve3(eq);
    for (const Vec3& p : enumerate_points(set, cube(-10, 10))) {
      CHECK(contains(set, p));
      CHECK(eq.satisfied_by(p));
    }
  }
}

TEST_CASE("ball filter equals box enumeration plus distance filter") {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<Int> coeff(-15, 15);
  std::uniform_int_distribution<Int> rad(1, 8);
  for (int i = 0; i < 100; ++i) {
    Equation3 eq{coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
    auto [set, tag] = solve3(eq);
    Int r = rad(rng);
    Region boxed = cube(-r, r);
    Region balled = boxed;
    balled.ball = Ball{{0, 0, 0}, r * r};
    std::vector<Vec3> filtered;
    for (const Vec3& p : enumerate_points(set, boxed))
      if (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] <= r * r)
        filtered.push_back(p);
    CHECK(enumerate_points(set, balled) == filtered);
  }
}

TEST_CASE("count equals enumeration length") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<Int> coeff(-10, 10);
  for (int i = 0; i < 100; ++i) {
    Equation3 eq{coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
    auto [set, tag] = solve3(eq);
    Region region = cube(-8, 8);
    CHECK(count_points(set, region) == enumerate_points(set, region).size());
  }
}

TEST_CASE("semantic equality") {
  // the same plane written with different parametrizations
  auto [a, t1] = solve3({2, 3, 7, 23});
  SolutionSet3 b =
      SolutionSet3::lattice({-23, 23, 0}, {{7, -7, 1}, {-3, 2, 0}});
  CHECK(semantically_equal(a, b));
  SolutionSet3 shifted =
      SolutionSet3::lattice({-23, 24, 0}, {{7, -7, 1}, {-3, 2, 0}});
  CHECK(!semantically_equal(a, shifted));
  CHECK(semantically_equal(SolutionSet3::none(2, 3), SolutionSet3::none(5, 7)));
  CHECK(!semantically_equal(a, SolutionSet3::none(2, 3)));
  // sublattice of the same rank is not equal
  SolutionSet3 sparse =
      SolutionSet3::lattice({-23, 23, 0}, {{14, -14, 2}, {-3, 2, 0}});
  CHECK(!semantically_equal(a, sparse));
}
