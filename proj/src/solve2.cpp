#include "dio/solve2.hpp"

namespace dio {

namespace {

// Solves a*x + b*y = c with gcd(a, b) = 1 by descending on the coefficient of
// smaller magnitude. Each step divides the larger data through by the pivot
// coefficient (remainders in [0, |pivot|)) and recurses on the remainder
// equation; the descent stops as soon as a coefficient reaches magnitude 1.
Vec2 descent(Int a, Int b, Int c) {
  if (a == 1 || a == -1) return {checked_mul(a, c), 0};
  if (b == 1 || b == -1) return {0, checked_mul(b, c)};
  if (checked_abs(a) > checked_abs(b)) {
    Vec2 yx = descent(b, a, c);
    return {yx[1], yx[0]};
  }
  // x = Q - q*y + (R - r*y)/a, so the fresh unknown z satisfies a*z + r*y = R.
  Int r = mod_floor(b, a);
  Int q = (b - r) / a;
  Int big_r = mod_floor(c, a);
  Int big_q = (c - big_r) / a;
  Vec2 zy = descent(a, r, big_r);
  Int y = zy[1];
  Int x = checked_add(checked_sub(big_q, checked_mul(q, y)), zy[0]);
  return {x, y};
}

}  // namespace

std::optional<Vec2> particular_solution2(const Equation2& eq) {
  Int g = gcd(eq.a, eq.b);
  if (!divides(g, eq.c)) return std::nullopt;
  return descent(eq.a / g, eq.b / g, eq.c / g);
}

SolutionSet2 solve2(const Equation2& eq) {
  const auto [a, b, c] = eq;
  if (a == 0 && b == 0) {
    if (c != 0) return SolutionSet2::none(0, c);
    return SolutionSet2::lattice({0, 0}, {{1, 0}, {0, 1}});
  }
  if (a == 0) {
    if (!divides(b, c)) return SolutionSet2::none(b, c);
    return SolutionSet2::lattice({0, c / b}, {{1, 0}});
  }
  if (b == 0) {
    if (!divides(a, c)) return SolutionSet2::none(a, c);
    return SolutionSet2::lattice({c / a, 0}, {{0, 1}});
  }
  Int g = gcd(a, b);
  if (!divides(g, c)) return SolutionSet2::none(g, c);
  Vec2 base = descent(a / g, b / g, c / g);
  Vec2 gen = {b / g, -(a / g)};
  if (gen[0] < 0) gen = {-gen[0], -gen[1]};
  return SolutionSet2::lattice(base, {gen});
}

}  // namespace dio
