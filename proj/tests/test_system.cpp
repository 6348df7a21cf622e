#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "dio/lattice_set.hpp"
#include "dio/oracle.hpp"
#include "dio/solve2.hpp"
#include "dio/system.hpp"

using namespace dio;

namespace {

Region box_region(Int lo, Int hi) {
  Region r;
  r.box = {Interval{lo, hi}, Interval{lo, hi}, Interval{lo, hi}};
  return r;
}

void check_against_scan(const System2x3& sys, Int lo = -30, Int hi = 30) {
  Region region = box_region(lo, hi);
  auto [set, tag] = solve_system(sys);
  Equation3 eqs[2] = {sys.row1, sys.row2};
  auto expected = brute_force(eqs, region);
  auto actual = enumerate_points(set, region);
  CHECK(actual == expected);
  if (!set.solvable) CHECK(expected.empty());
}

const System2x3 kExample5{{6, -4, 3, 30}, {3, 6, -2, 25}};

}  // namespace

TEST_CASE("system invariants on the worked system") {
  SystemInvariants inv = system_invariants(kExample5);
  CHECK(inv.D1 == 48);
  CHECK(inv.D2 == -10);
  CHECK(inv.D3 == -21);
  CHECK(inv.D == -135);
  CHECK(inv.D23 == 1);
  CHECK(inv.delta == 3);
  // -a1*D2 + b1*D3 = c1*D1
  CHECK(-6 * inv.D2 + (-4) * inv.D3 == 3 * inv.D1);
}

TEST_CASE("system invariants, hand-checked small system") {
  SystemInvariants inv = system_invariants({{1, 0, 1, 0}, {0, 1, 1, 0}});
  CHECK(inv.D1 == 1);
  CHECK(inv.D2 == -1);
  CHECK(inv.D3 == 1);
  CHECK(inv.D == 0);
  CHECK(inv.D23 == 1);
  CHECK(inv.delta == 1);
}

TEST_CASE("system invariants contract errors") {
  // unreduced row
  CHECK_THROWS_AS(system_invariants({{2, 4, 6, 2}, {1, 1, 1, 1}}),
                  std::invalid_argument);
  // proportional rows
  CHECK_THROWS_AS(system_invariants({{1, 2, 3, 4}, {-1, -2, -3, -4}}),
                  std::invalid_argument);
  // c1 = 0
  CHECK_THROWS_AS(system_invariants({{1, 2, 0, 4}, {1, 1, 1, 1}}),
                  std::invalid_argument);
}

TEST_CASE("planar reduction") {
  Equation2 eq = planar_reduction(kExample5);
  CHECK(eq.a == -21);
  CHECK(eq.b == -10);
  CHECK(eq.c == -135);

  eq = planar_reduction({{1, 0, 1, 0}, {0, 1, 1, 0}});
  // x - y = 0 after eliminating z
  CHECK(eq.a == 1);
  CHECK(eq.b == -1);
  CHECK(eq.c == 0);

  CHECK_THROWS_AS(planar_reduction({{1, 2, 3, 4}, {1, 2, 3, 5}}),
                  std::invalid_argument);
}

TEST_CASE("worked 2x3 system") {
  auto [set, tag] = solve_system(kExample5);
  CHECK(tag.kind == SysCase::General);
  CHECK(!tag.rows_swapped);
  REQUIRE(set.solvable);
  REQUIRE(set.rank() == 1);
  // S = (5 - 10L, 3 + 21L, 4 + 48L)
  CHECK(semantically_equal(
      set, SolutionSet3::lattice({5, 3, 4}, {{-10, 21, 48}})));
  check_against_scan(kExample5, -100, 100);
}

TEST_CASE("system with crossed zeros") {
  System2x3 sys{{13, 0, 11, 123}, {0, -5, 7, 4}};
  auto [set, tag] = solve_system(sys);
  CHECK(tag.kind == SysCase::C1Group3);
  REQUIRE(set.solvable);
  REQUIRE(set.rank() == 1);
  CHECK(semantically_equal(
      set, SolutionSet3::lattice({12, -5, -3}, {{55, -91, -65}})));
  // both equations hold on base and base + generator
  for (const Vec3& p : {Vec3{12, -5, -3}, Vec3{67, -96, -68}}) {
    CHECK(sys.row1.satisfied_by(p));
    CHECK(sys.row2.satisfied_by(p));
  }
  check_against_scan(sys, -200, 200);
}

TEST_CASE("row reduction failures and degeneracies") {
  SUBCASE("unscalable row") {
    auto [set, tag] = solve_system({{1, 1, 1, 5}, {2, 2, 2, 7}});
    CHECK(tag.kind == SysCase::RowContradiction);
    CHECK(!set.solvable);
    CHECK(set.reason.divisor == 2);
    CHECK(set.reason.target == 7);
  }
  SUBCASE("0 = k row") {
    auto [set, tag] = solve_system({{0, 0, 0, 3}, {1, 1, 1, 1}});
    CHECK(tag.kind == SysCase::RowContradiction);
    CHECK(!set.solvable);
  }
  SUBCASE("0 = 0 row drops to a single equation") {
    auto [set, tag] = solve_system({{0, 0, 0, 0}, {2, 1, 5, 16}});
    CHECK(tag.kind == SysCase::SingleEquation);
    REQUIRE(set.solvable);
    CHECK(set.rank() == 2);
  }
  SUBCASE("both rows degenerate") {
    auto [set, tag] = solve_system({{0, 0, 0, 0}, {0, 0, 0, 0}});
    REQUIRE(set.solvable);
    CHECK(set.rank() == 3);
  }
}

TEST_CASE("proportional rows") {
  SUBCASE("consistent") {
    auto [set, tag] = solve_system({{1, 1, 1, 1}, {-1, -1, -1, -1}});
    CHECK(tag.kind == SysCase::Proportional);
    REQUIRE(set.solvable);
    CHECK(set.rank() == 2);
    CHECK(contains(set, {1, 0, 0}));
  }
  SUBCASE("inconsistent") {
    auto [set, tag] = solve_system({{1, 1, 1, 1}, {1, 1, 1, 2}});
    CHECK(tag.kind == SysCase::Proportional);
    CHECK(!set.solvable);
  }
  SUBCASE("proportional after row reduction") {
    auto [set, tag] = solve_system({{2, 4, 6, 2}, {3, 6, 9, 3}});
    CHECK(tag.kind == SysCase::Proportional);
    REQUIRE(set.solvable);
  }
}

TEST_CASE("row swap when c1 = 0") {
  System2x3 sys{{3, 5, 0, 7}, {2, 1, 4, 6}};
  auto [set, tag] = solve_system(sys);
  CHECK(tag.kind == SysCase::General);
  CHECK(tag.rows_swapped);
  REQUIRE(set.solvable);
  check_against_scan(sys);
}

TEST_CASE("note-1 identity on random admissible systems") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<Int> coeff(-15, 15);
  int done = 0;
  while (done < 10000) {
    System2x3 sys{{coeff(rng), coeff(rng), coeff(rng), coeff(rng)},
                  {coeff(rng), coeff(rng), coeff(rng), coeff(rng)}};
    SystemInvariants inv;
    try {
      inv = system_invariants(sys);
    } catch (const std::invalid_argument&) {
      continue;
    }
    REQUIRE(-sys.row1.a * inv.D2 + sys.row1.b * inv.D3 == sys.row1.c * inv.D1);
    REQUIRE((sys.row1.c * inv.D1) % inv.D23 == 0);
    REQUIRE(!(inv.D2 == 0 && inv.D3 == 0));
    ++done;
  }
}

TEST_CASE("condition-2 verdict does not depend on the particular solution") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<Int> coeff(-15, 15);
  int done = 0;
  while (done < 100) {
    System2x3 sys{{coeff(rng), coeff(rng), coeff(rng), coeff(rng)},
                  {coeff(rng), coeff(rng), coeff(rng), coeff(rng)}};
    SystemInvariants inv;
    try {
      inv = system_invariants(sys);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (!divides(inv.D23, inv.D)) continue;
    // all particular solutions of D3*x + D2*y = D differ by the kernel step
    SolutionSet2 plane = solve2({inv.D3, inv.D2, inv.D});
    REQUIRE(plane.solvable);
    REQUIRE(plane.rank() == 1);
    bool first_verdict = false;
    for (Int t = 0; t < 10; ++t) {
      Int x1 = plane.base[0] + t * plane.generators[0][0];
      Int y1 = plane.base[1] + t * plane.generators[0][1];
      bool verdict =
          divides(inv.delta, sys.row1.d - sys.row1.a * x1 - sys.row1.b * y1);
      if (t == 0)
        first_verdict = verdict;
      else
        REQUIRE(verdict == first_verdict);
    }
    ++done;
  }
}

TEST_CASE("oracle completeness on random systems") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<Int> coeff(-15, 15);
  for (int i = 0; i < 150; ++i) {
    System2x3 sys{{coeff(rng), coeff(rng), coeff(rng), coeff(rng)},
                  {coeff(rng), coeff(rng), coeff(rng), coeff(rng)}};
    check_against_scan(sys);
  }
}

TEST_CASE("oracle completeness on chart zero patterns") {
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<Int> coeff(-9, 9);
  auto rand_sys = [&] {
    return System2x3{{coeff(rng), coeff(rng), coeff(rng), coeff(rng)},
                     {coeff(rng), coeff(rng), coeff(rng), coeff(rng)}};
  };
  // force 2, 3 and 4 zero coefficients in assorted positions
  for (int i = 0; i < 120; ++i) {
    System2x3 sys = rand_sys();
    int zeros = 2 + static_cast<int>(rng() % 3);
    std::vector<int> slots = {0, 1, 2, 3, 4, 5};
    std::shuffle(slots.begin(), slots.end(), rng);
    for (int j = 0; j < zeros; ++j) {
      int s = slots[j];
      (s < 3 ? sys.row1 : sys.row2).coeff(s % 3) = 0;
    }
    check_against_scan(sys, -15, 15);
  }
  // same-column pairs specifically (including proportional leftovers)
  for (int i = 0; i < 60; ++i) {
    System2x3 sys = rand_sys();
    int axis = static_cast<int>(rng() % 3);
    sys.row1.coeff(axis) = 0;
    sys.row2.coeff(axis) = 0;
    check_against_scan(sys, -15, 15);
  }
}

TEST_CASE("rank contract: solvable nonproportional systems give lines") {
  std::mt19937_64 rng(45);
  std::uniform_int_distribution<Int> coeff(-15, 15);
  int done = 0;
  while (done < 500) {
    System2x3 sys{{coeff(rng), coeff(rng), coeff(rng), coeff(rng)},
                  {coeff(rng), coeff(rng), coeff(rng), coeff(rng)}};
    try {
      system_invariants(sys);
    } catch (const std::invalid_argument&) {
      continue;
    }
    auto [set, tag] = solve_system(sys);
    if (!set.solvable) continue;
    CHECK(set.rank() == 1);
    Vec3 p = set.base;
    Vec3 q;
    for (int k = 0; k < 3; ++k) q[k] = p[k] + set.generators[0][k];
    for (const Vec3& v : {p, q}) {
      CHECK(sys.row1.satisfied_by(v));
      CHECK(sys.row2.satisfied_by(v));
    }
    ++done;
  }
}
