#include "dio/system.hpp"

#include <optional>
#include <stdexcept>

#include "dio/solve2.hpp"
#include "dio/solve3.hpp"

namespace dio {

namespace {

Int det2(Int a, Int b, Int c, Int d) {
  return checked_sub(checked_mul(a, d), checked_mul(b, c));
}

int count_zeros(const System2x3& sys) {
  int n = 0;
  for (int i = 0; i < 3; ++i) {
    n += sys.row1.coeff(i) == 0;
    n += sys.row2.coeff(i) == 0;
  }
  return n;
}

// For gcd-1 coefficient rows: proportional iff row1 = eps * row2, eps = +-1.
std::optional<Int> proportionality(const Equation3& r1, const Equation3& r2) {
  for (Int eps : {Int{1}, Int{-1}}) {
    if (r1.a == eps * r2.a && r1.b == eps * r2.b && r1.c == eps * r2.c)
      return eps;
  }
  return std::nullopt;
}

// Particular solution of a*x + b*y = c, any zero pattern admitted.
std::optional<Vec2> particular_any(Int a, Int b, Int c) {
  if (a == 0 && b == 0) {
    if (c != 0) return std::nullopt;
    return Vec2{0, 0};
  }
  if (a == 0) {
    if (!divides(b, c)) return std::nullopt;
    return Vec2{0, c / b};
  }
  if (b == 0) {
    if (!divides(a, c)) return std::nullopt;
    return Vec2{c / a, 0};
  }
  return particular_solution2({a, b, c});
}

void check_invariant_preconditions(const System2x3& sys) {
  if (gcd3(sys.row1.a, sys.row1.b, sys.row1.c) != 1 ||
      gcd3(sys.row2.a, sys.row2.b, sys.row2.c) != 1)
    throw std::invalid_argument("system_invariants: rows not reduced");
  if (proportionality(sys.row1, sys.row2))
    throw std::invalid_argument("system_invariants: proportional rows");
  if (sys.row1.c == 0)
    throw std::invalid_argument("system_invariants: c1 = 0 (swap rows first)");
}

// One row has a single nonzero coefficient (necessarily +-1 after row
// reduction): pin that variable, substitute into the other row, and solve the
// remaining two-variable equation. Covers the two-zeros-in-a-row, three-zero
// and four-zero chart families.
SolutionSet3 solve_pinned(const Equation3& pin_row, const Equation3& other) {
  int axis = pin_row.a != 0 ? 0 : pin_row.b != 0 ? 1 : 2;
  Int k = pin_row.coeff(axis);
  if (!divides(k, pin_row.d)) return SolutionSet3::none(k, pin_row.d);
  Int value = pin_row.d / k;

  int u = axis == 0 ? 1 : 0;
  int v = axis == 2 ? 1 : 2;
  Int rhs = checked_sub(other.d, checked_mul(other.coeff(axis), value));
  SolutionSet2 plane = solve2({other.coeff(u), other.coeff(v), rhs});
  if (!plane.solvable)
    return SolutionSet3::none(plane.reason.divisor, plane.reason.target);

  Vec3 base{};
  base[axis] = value;
  base[u] = plane.base[0];
  base[v] = plane.base[1];
  std::vector<Vec3> gens;
  for (const Vec2& g2 : plane.generators) {
    Vec3 g{};
    g[u] = g2[0];
    g[v] = g2[1];
    gens.push_back(g);
  }
  return SolutionSet3::lattice(base, std::move(gens));
}

// Both zeros in the same column: a 2x2 system in the remaining variables,
// with the zeroed variable free.
std::pair<SolutionSet3, SystemTag> solve_zero_column(const System2x3& sys,
                                                     int free_axis) {
  const Equation3& r1 = sys.row1;
  const Equation3& r2 = sys.row2;
  int u = free_axis == 0 ? 1 : 0;
  int v = free_axis == 2 ? 1 : 2;
  Int det = det2(r1.coeff(u), r1.coeff(v), r2.coeff(u), r2.coeff(v));
  SystemTag tag{SysCase::C1Group1};
  if (det == 0) {
    // The two planes are parallel or coincide: reduced rows match up to sign.
    Int eps = r1.coeff(u) == r2.coeff(u) ? 1 : -1;
    Int gap = checked_sub(r1.d, checked_mul(eps, r2.d));
    if (gap != 0) return {SolutionSet3::none(0, gap), tag};
    auto [set, sub] = solve3(r1);
    tag.equation_case = sub;
    return {std::move(set), tag};
  }
  Int num_u = det2(r1.d, r1.coeff(v), r2.d, r2.coeff(v));
  Int num_v = det2(r1.coeff(u), r1.d, r2.coeff(u), r2.d);
  if (!divides(det, num_u)) return {SolutionSet3::none(det, num_u), tag};
  if (!divides(det, num_v)) return {SolutionSet3::none(det, num_v), tag};
  Vec3 base{};
  base[u] = num_u / det;
  base[v] = num_v / det;
  Vec3 gen{};
  gen[free_axis] = 1;
  return {SolutionSet3::lattice(base, {gen}), tag};
}

// Two zeros, neither sharing a row nor a column: solve row2 in its two
// variables, substitute the shared variable into row1, and compose the two
// one-parameter families.
std::pair<SolutionSet3, SystemTag> solve_cross_zeros(const System2x3& sys) {
  const Equation3& r1 = sys.row1;
  const Equation3& r2 = sys.row2;
  int k1 = r1.a == 0 ? 0 : r1.b == 0 ? 1 : 2;  // absent from row1
  int k2 = r2.a == 0 ? 0 : r2.b == 0 ? 1 : 2;  // absent from row2
  int k3 = 3 - k1 - k2;                        // shared variable
  SystemTag tag{SysCase::C1Group3};

  SolutionSet2 line2 = solve2({r2.coeff(k1), r2.coeff(k3), r2.d});
  if (!line2.solvable)
    return {SolutionSet3::none(line2.reason.divisor, line2.reason.target), tag};
  Int u1 = line2.base[0], w1 = line2.base[1];
  Int gu = line2.generators[0][0], gw = line2.generators[0][1];

  // r1[k2]*v + r1[k3]*(w1 + gw*t) = d1
  Int rhs = checked_sub(r1.d, checked_mul(r1.coeff(k3), w1));
  SolutionSet2 line1 = solve2({r1.coeff(k2), checked_mul(r1.coeff(k3), gw), rhs});
  if (!line1.solvable)
    return {SolutionSet3::none(line1.reason.divisor, line1.reason.target), tag};
  Int v1 = line1.base[0], t1 = line1.base[1];
  Int gv = line1.generators[0][0], gt = line1.generators[0][1];

  Vec3 base{};
  base[k1] = checked_add(u1, checked_mul(gu, t1));
  base[k2] = v1;
  base[k3] = checked_add(w1, checked_mul(gw, t1));
  Vec3 gen{};
  gen[k1] = checked_mul(gu, gt);
  gen[k2] = gv;
  gen[k3] = checked_mul(gw, gt);
  return {SolutionSet3::lattice(base, {gen}), tag};
}

std::pair<SolutionSet3, SystemTag> solve_chart(const System2x3& sys, int zeros) {
  const Equation3& r1 = sys.row1;
  const Equation3& r2 = sys.row2;
  SysCase kind = zeros == 3 ? SysCase::C2Chart
               : zeros == 4 ? SysCase::C3Chart
                            : SysCase::C1Group2;

  // Any row with a single nonzero coefficient pins its variable.
  int nz1 = (r1.a != 0) + (r1.b != 0) + (r1.c != 0);
  int nz2 = (r2.a != 0) + (r2.b != 0) + (r2.c != 0);
  if (nz1 == 1) {
    SolutionSet3 set = solve_pinned(r1, r2);
    return {std::move(set), SystemTag{kind}};
  }
  if (nz2 == 1) {
    SolutionSet3 set = solve_pinned(r2, r1);
    return {std::move(set), SystemTag{kind}};
  }

  // Exactly one zero per row: same column or crossed.
  for (int axis = 0; axis < 3; ++axis) {
    if (r1.coeff(axis) == 0 && r2.coeff(axis) == 0)
      return solve_zero_column(sys, axis);
  }
  return solve_cross_zeros(sys);
}

// Formula-4 invariants path; rows reduced, nonproportional, c1 != 0.
std::pair<SolutionSet3, SystemTag> solve_general(const System2x3& sys,
                                                 bool swapped) {
  SystemInvariants inv = system_invariants(sys);
  SystemTag tag{SysCase::General, swapped};
  if (!divides(inv.D23, inv.D))
    return {SolutionSet3::none(inv.D23, inv.D), tag};

  // Planar equation D3*x + D2*y = D; any particular solution will do.
  Vec2 xy = *particular_any(inv.D3, inv.D2, inv.D);
  const Equation3& r1 = sys.row1;
  Int residue = checked_sub(
      r1.d, checked_add(checked_mul(r1.a, xy[0]), checked_mul(r1.b, xy[1])));
  if (!divides(inv.delta, residue))
    return {SolutionSet3::none(inv.delta, residue), tag};

  // K*m + c1*z = residue, with K = c1*D1/D23 and gcd(K, c1) = delta.
  Int K = checked_mul(r1.c, inv.D1) / inv.D23;
  Vec2 mz = *particular_any(K, r1.c, residue);

  Int d2q = inv.D2 / inv.D23;
  Int d3q = inv.D3 / inv.D23;
  Int step = r1.c / inv.delta;
  Vec3 base = {checked_sub(xy[0], checked_mul(d2q, mz[0])),
               checked_add(xy[1], checked_mul(d3q, mz[0])), mz[1]};
  Vec3 gen = {checked_mul(d2q, step), -checked_mul(d3q, step), K / inv.delta};
  return {SolutionSet3::lattice(base, {gen}), tag};
}

}  // namespace

SystemInvariants system_invariants(const System2x3& sys) {
  check_invariant_preconditions(sys);
  const Equation3& r1 = sys.row1;
  const Equation3& r2 = sys.row2;
  SystemInvariants inv;
  inv.D1 = det2(r1.a, r1.b, r2.a, r2.b);
  inv.D2 = det2(r1.b, r1.c, r2.b, r2.c);
  inv.D3 = det2(r1.a, r1.c, r2.a, r2.c);
  inv.D = det2(r1.d, r1.c, r2.d, r2.c);
  if (inv.D2 == 0 && inv.D3 == 0)
    throw std::invalid_argument("system_invariants: D2 = D3 = 0");
  inv.D23 = gcd(inv.D2, inv.D3);
  inv.delta = gcd(checked_mul(r1.c, inv.D1) / inv.D23, r1.c);
  return inv;
}

Equation2 planar_reduction(const System2x3& sys) {
  SystemInvariants inv = system_invariants(sys);
  return {inv.D3, inv.D2, inv.D};
}

std::pair<SolutionSet3, SystemTag> solve_system(const System2x3& sys) {
  // Row preprocessing: divisibility test and reduction to gcd-1 rows;
  // degenerate 0 = 0 rows are dropped, 0 = k rows are contradictions.
  std::vector<Equation3> rows;
  for (Equation3 row : {sys.row1, sys.row2}) {
    Int g = gcd3(row.a, row.b, row.c);
    if (g == 0) {
      if (row.d != 0)
        return {SolutionSet3::none(0, row.d), SystemTag{SysCase::RowContradiction}};
      continue;  // 0 = 0
    }
    if (!divides(g, row.d))
      return {SolutionSet3::none(g, row.d), SystemTag{SysCase::RowContradiction}};
    rows.push_back({row.a / g, row.b / g, row.c / g, row.d / g});
  }

  if (rows.size() < 2) {
    Equation3 eq = rows.empty() ? Equation3{0, 0, 0, 0} : rows[0];
    auto [set, sub] = solve3(eq);
    SystemTag tag{SysCase::SingleEquation};
    tag.equation_case = sub;
    return {std::move(set), tag};
  }

  System2x3 reduced{rows[0], rows[1]};
  int zeros = count_zeros(reduced);
  if (zeros >= 2) return solve_chart(reduced, zeros);

  if (auto eps = proportionality(reduced.row1, reduced.row2)) {
    SystemTag tag{SysCase::Proportional};
    Int gap = checked_sub(reduced.row1.d, checked_mul(*eps, reduced.row2.d));
    if (gap != 0) return {SolutionSet3::none(0, gap), tag};
    auto [set, sub] = solve3(reduced.row1);
    tag.equation_case = sub;
    return {std::move(set), tag};
  }

  bool swap = reduced.row1.c == 0;
  if (swap) std::swap(reduced.row1, reduced.row2);
  return solve_general(reduced, swap);
}

}  // namespace dio
