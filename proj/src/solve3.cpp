#include "dio/solve3.hpp"

#include <stdexcept>

#include "dio/solve2.hpp"

namespace dio {

namespace {

int count_zero_coeffs(const Equation3& eq) {
  return (eq.a == 0) + (eq.b == 0) + (eq.c == 0);
}

bool is_unit(Int k) { return k == 1 || k == -1; }

// Exactly two coefficients zero: the remaining one pins its variable, the
// other two are free.
std::pair<SolutionSet3, Case3> solve_two_zeros(const Equation3& eq) {
  int axis = eq.a != 0 ? 0 : eq.b != 0 ? 1 : 2;
  Int k = eq.coeff(axis);
  if (!divides(k, eq.d))
    return {SolutionSet3::none(k, eq.d), Case3::BGroup2};
  Vec3 base{};
  base[axis] = eq.d / k;
  std::vector<Vec3> gens;
  for (int i = 0; i < 3; ++i) {
    if (i == axis) continue;
    Vec3 g{};
    g[i] = 1;
    gens.push_back(g);
  }
  return {SolutionSet3::lattice(base, std::move(gens)), Case3::BGroup2};
}

// Exactly one coefficient zero: solve the two-variable equation on the
// nonzero pair and insert a free unit generator for the absent variable.
std::pair<SolutionSet3, Case3> solve_one_zero(const Equation3& eq) {
  int free_axis = eq.a == 0 ? 0 : eq.b == 0 ? 1 : 2;
  int u = free_axis == 0 ? 1 : 0;
  int v = free_axis == 2 ? 1 : 2;
  SolutionSet2 plane = solve2({eq.coeff(u), eq.coeff(v), eq.d});
  if (!plane.solvable)
    return {SolutionSet3::none(plane.reason.divisor, plane.reason.target),
            Case3::BGroup1};
  Vec3 base{};
  base[u] = plane.base[0];
  base[v] = plane.base[1];
  Vec3 free_gen{};
  free_gen[free_axis] = 1;
  std::vector<Vec3> gens{free_gen};
  for (const Vec2& g2 : plane.generators) {
    Vec3 g{};
    g[u] = g2[0];
    g[v] = g2[1];
    gens.push_back(g);
  }
  return {SolutionSet3::lattice(base, std::move(gens)), Case3::BGroup1};
}

}  // namespace

SolutionSet3 solve3_unit(const Equation3& eq) {
  const auto [a, b, c, d] = eq;
  if (is_unit(a)) {
    // x = (d - b*m - c*n) / a
    return SolutionSet3::lattice({checked_mul(a, d), 0, 0},
                                 {{-checked_mul(a, b), 1, 0},
                                  {-checked_mul(a, c), 0, 1}});
  }
  if (is_unit(b)) {
    return SolutionSet3::lattice({0, checked_mul(b, d), 0},
                                 {{1, -checked_mul(b, a), 0},
                                  {0, -checked_mul(b, c), 1}});
  }
  if (is_unit(c)) {
    return SolutionSet3::lattice({0, 0, checked_mul(c, d)},
                                 {{1, 0, -checked_mul(c, a)},
                                  {0, 1, -checked_mul(c, b)}});
  }
  throw std::invalid_argument("solve3_unit: no unit coefficient");
}

std::pair<SolutionSet3, Case3> solve3_coprime_pair(const Equation3& eq) {
  const auto [a, b, c, d] = eq;
  if (gcd3(a, b, c) != 1 || is_unit(a) || is_unit(b) || is_unit(c) ||
      a == 0 || b == 0 || c == 0)
    throw std::invalid_argument("solve3_coprime_pair: precondition");

  auto scaled = [&](Int x1, Int y1) {
    return Vec2{checked_mul(d, x1), checked_mul(d, y1)};
  };
  if (gcd(a, b) == 1) {
    Bezout bz = ext_gcd(a, b);
    Vec2 p = scaled(bz.x, bz.y);
    // x = (d - c*m)*x1 - b*n, y = (d - c*m)*y1 + a*n, z = m
    return {SolutionSet3::lattice(
                {p[0], p[1], 0},
                {{-checked_mul(c, bz.x), -checked_mul(c, bz.y), 1},
                 {-b, a, 0}}),
            Case3::Formula2AB};
  }
  if (gcd(b, c) == 1) {
    Bezout bz = ext_gcd(b, c);
    Vec2 p = scaled(bz.x, bz.y);
    return {SolutionSet3::lattice(
                {0, p[0], p[1]},
                {{1, -checked_mul(a, bz.x), -checked_mul(a, bz.y)},
                 {0, -c, b}}),
            Case3::Formula2BC};
  }
  if (gcd(a, c) == 1) {
    Bezout bz = ext_gcd(a, c);
    Vec2 p = scaled(bz.x, bz.y);
    return {SolutionSet3::lattice(
                {p[0], 0, p[1]},
                {{-checked_mul(b, bz.x), 1, -checked_mul(b, bz.y)},
                 {-c, 0, a}}),
            Case3::Formula2AC};
  }
  throw std::invalid_argument("solve3_coprime_pair: no coprime pair");
}

SolutionSet3 solve3_general(const Equation3& eq) {
  const auto [a, b, c, d] = eq;
  Int delta = gcd(a, b);
  if (gcd3(a, b, c) != 1 || delta == 1 || gcd(b, c) == 1 || gcd(a, c) == 1 ||
      is_unit(a) || is_unit(b) || is_unit(c))
    throw std::invalid_argument("solve3_general: precondition");

  // (a/delta)*x1 + (b/delta)*y1 = 1
  Bezout inner = ext_gcd(a / delta, b / delta);
  // delta*t + c*z = d, solvable because (delta, c) = (a, b, c) = 1.
  Bezout outer = ext_gcd(delta, c);
  Int t1 = checked_mul(outer.x, d);
  Int z1 = checked_mul(outer.y, d);
  Vec3 base = {checked_mul(t1, inner.x), checked_mul(t1, inner.y), z1};
  Vec3 gen_m = {-checked_mul(c, inner.x), -checked_mul(c, inner.y), delta};
  Vec3 gen_n = {-(b / delta), a / delta, 0};
  return SolutionSet3::lattice(base, {gen_m, gen_n});
}

std::pair<SolutionSet3, Case3> solve3(const Equation3& eq) {
  int zeros = count_zero_coeffs(eq);
  if (zeros == 3) {
    if (eq.d != 0) return {SolutionSet3::none(0, eq.d), Case3::BGroup3};
    return {SolutionSet3::lattice({0, 0, 0}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
            Case3::BGroup3};
  }
  if (zeros == 2) return solve_two_zeros(eq);
  if (zeros == 1) return solve_one_zero(eq);

  Int g = gcd3(eq.a, eq.b, eq.c);
  if (!divides(g, eq.d))
    return {SolutionSet3::none(g, eq.d), Case3::UnsolvableDivisibility};
  Equation3 red{eq.a / g, eq.b / g, eq.c / g, eq.d / g};

  if (is_unit(red.a) || is_unit(red.b) || is_unit(red.c))
    return {solve3_unit(red), Case3::Formula1};
  if (gcd(red.a, red.b) == 1 || gcd(red.b, red.c) == 1 ||
      gcd(red.a, red.c) == 1)
    return solve3_coprime_pair(red);
  return {solve3_general(red), Case3::Formula3};
}

}  // namespace dio
