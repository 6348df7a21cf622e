#include "dio/lattice_set.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>

namespace dio {

namespace {

struct Range {
  Int lo, hi;  // empty when lo > hi
  bool empty() const { return lo > hi; }
};

Range intersect(Range a, Range b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

// Integers q with n = q*m for some n in [nlo, nhi]; m != 0.
Range quotient_range(Int nlo, Int nhi, Int m) {
  if (m > 0) return {ceil_div(nlo, m), floor_div(nhi, m)};
  return {ceil_div(nhi, m), floor_div(nlo, m)};
}

// [lo, hi] of k*u over u in [ulo, uhi].
void add_scaled(Int& lo, Int& hi, Int k, Int ulo, Int uhi) {
  Int p = checked_mul(k, ulo);
  Int q = checked_mul(k, uhi);
  lo = checked_add(lo, std::min(p, q));
  hi = checked_add(hi, std::max(p, q));
}

std::optional<Int> exact_quot(Int n, Int d) {
  if (d == 0 || n % d != 0) return std::nullopt;
  return n / d;
}

Int det3(const Vec3& u, const Vec3& v, const Vec3& w) {
  Int m1 = checked_sub(checked_mul(v[1], w[2]), checked_mul(v[2], w[1]));
  Int m2 = checked_sub(checked_mul(v[0], w[2]), checked_mul(v[2], w[0]));
  Int m3 = checked_sub(checked_mul(v[0], w[1]), checked_mul(v[1], w[0]));
  return checked_add(checked_sub(checked_mul(u[0], m1), checked_mul(u[1], m2)),
                     checked_mul(u[2], m3));
}

Vec3 offset_point(const SolutionSet3& set, std::initializer_list<Int> lambdas) {
  Vec3 p = set.base;
  auto it = lambdas.begin();
  for (const Vec3& g : set.generators) {
    Int l = *it++;
    for (int i = 0; i < 3; ++i) p[i] = checked_add(p[i], checked_mul(l, g[i]));
  }
  return p;
}

// First coordinate pair with a nonzero 2x2 generator minor; the generators
// are independent, so one exists for rank 2.
struct MinorPick {
  int i, j;
  Int m;
};
std::optional<MinorPick> pick_minor(const Vec3& g1, const Vec3& g2) {
  constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [i, j] : pairs) {
    Int m = checked_sub(checked_mul(g1[i], g2[j]), checked_mul(g1[j], g2[i]));
    if (m != 0) return MinorPick{i, j, m};
  }
  return std::nullopt;
}

}  // namespace

bool Region::admits(const Vec3& p) const {
  for (int i = 0; i < 3; ++i)
    if (p[i] < box[i].lo || p[i] > box[i].hi) return false;
  if (ball) {
    Int d2 = 0;
    for (int i = 0; i < 3; ++i) {
      Int diff = checked_sub(p[i], ball->center[i]);
      d2 = checked_add(d2, checked_mul(diff, diff));
    }
    if (d2 > ball->radius_squared) return false;
  }
  if (predicate && !predicate(p)) return false;
  return true;
}

Predicate positive_predicate() {
  return [](const Vec3& p) { return p[0] > 0 && p[1] > 0 && p[2] > 0; };
}

Predicate triangle_predicate() {
  return [](const Vec3& p) {
    return checked_add(p[0], p[1]) > p[2] && checked_add(p[1], p[2]) > p[0] &&
           checked_add(p[0], p[2]) > p[1];
  };
}

bool contains(const SolutionSet3& set, const Vec3& p) {
  if (!set.solvable) return false;
  Vec3 diff;
  for (int i = 0; i < 3; ++i) diff[i] = checked_sub(p[i], set.base[i]);
  switch (set.rank()) {
    case 0:
      return diff == Vec3{0, 0, 0};
    case 1: {
      const Vec3& g = set.generators[0];
      int pivot = g[0] != 0 ? 0 : g[1] != 0 ? 1 : 2;
      auto l = exact_quot(diff[pivot], g[pivot]);
      if (!l) return false;
      for (int i = 0; i < 3; ++i)
        if (checked_mul(*l, g[i]) != diff[i]) return false;
      return true;
    }
    case 2: {
      const Vec3& g1 = set.generators[0];
      const Vec3& g2 = set.generators[1];
      auto pick = pick_minor(g1, g2);
      if (!pick) return false;
      auto [i, j, m] = *pick;
      auto l1 = exact_quot(
          checked_sub(checked_mul(diff[i], g2[j]), checked_mul(diff[j], g2[i])), m);
      auto l2 = exact_quot(
          checked_sub(checked_mul(g1[i], diff[j]), checked_mul(g1[j], diff[i])), m);
      if (!l1 || !l2) return false;
      for (int k = 0; k < 3; ++k) {
        Int v = checked_add(checked_mul(*l1, g1[k]), checked_mul(*l2, g2[k]));
        if (v != diff[k]) return false;
      }
      return true;
    }
    default: {
      const Vec3& g1 = set.generators[0];
      const Vec3& g2 = set.generators[1];
      const Vec3& g3 = set.generators[2];
      Int det = det3(g1, g2, g3);
      auto l1 = exact_quot(det3(diff, g2, g3), det);
      auto l2 = exact_quot(det3(g1, diff, g3), det);
      auto l3 = exact_quot(det3(g1, g2, diff), det);
      if (!l1 || !l2 || !l3) return false;
      for (int k = 0; k < 3; ++k) {
        Int v = checked_add(checked_add(checked_mul(*l1, g1[k]),
                                        checked_mul(*l2, g2[k])),
                            checked_mul(*l3, g3[k]));
        if (v != diff[k]) return false;
      }
      return true;
    }
  }
}

bool contains(const SolutionSet2& set, const Vec2& p) {
  if (!set.solvable) return false;
  Vec2 diff = {checked_sub(p[0], set.base[0]), checked_sub(p[1], set.base[1])};
  switch (set.rank()) {
    case 0:
      return diff == Vec2{0, 0};
    case 1: {
      const Vec2& g = set.generators[0];
      int pivot = g[0] != 0 ? 0 : 1;
      auto l = exact_quot(diff[pivot], g[pivot]);
      if (!l) return false;
      return checked_mul(*l, g[0]) == diff[0] && checked_mul(*l, g[1]) == diff[1];
    }
    default: {
      const Vec2& g1 = set.generators[0];
      const Vec2& g2 = set.generators[1];
      Int m = checked_sub(checked_mul(g1[0], g2[1]), checked_mul(g1[1], g2[0]));
      auto l1 = exact_quot(
          checked_sub(checked_mul(diff[0], g2[1]), checked_mul(diff[1], g2[0])), m);
      auto l2 = exact_quot(
          checked_sub(checked_mul(g1[0], diff[1]), checked_mul(g1[1], diff[0])), m);
      return l1 && l2;
    }
  }
}

std::vector<Vec3> enumerate_points(const SolutionSet3& set, const Region& region) {
  std::vector<Vec3> out;
  if (!set.solvable) return out;

  switch (set.rank()) {
    case 0:
      if (region.admits(set.base)) out.push_back(set.base);
      break;
    case 1: {
      const Vec3& g = set.generators[0];
      Range r{std::numeric_limits<Int>::min(), std::numeric_limits<Int>::max()};
      bool feasible = true;
      for (int i = 0; i < 3 && feasible; ++i) {
        Int lo = checked_sub(region.box[i].lo, set.base[i]);
        Int hi = checked_sub(region.box[i].hi, set.base[i]);
        if (g[i] == 0) {
          feasible = lo <= 0 && 0 <= hi;
        } else {
          r = intersect(r, quotient_range(lo, hi, g[i]));
        }
      }
      if (!feasible) break;
      for (Int l = r.lo; l <= r.hi; ++l) {
        Vec3 p = offset_point(set, {l});
        if (region.admits(p)) out.push_back(p);
      }
      break;
    }
    case 2: {
      const Vec3& g1 = set.generators[0];
      const Vec3& g2 = set.generators[1];
      auto pick = pick_minor(g1, g2);
      auto [i, j, m] = *pick;
      Int ulo = checked_sub(region.box[i].lo, set.base[i]);
      Int uhi = checked_sub(region.box[i].hi, set.base[i]);
      Int vlo = checked_sub(region.box[j].lo, set.base[j]);
      Int vhi = checked_sub(region.box[j].hi, set.base[j]);
      // lambda1 = (g2[j]*u - g2[i]*v) / m over the box cross-section
      Int n1lo = 0, n1hi = 0;
      add_scaled(n1lo, n1hi, g2[j], ulo, uhi);
      add_scaled(n1lo, n1hi, -g2[i], vlo, vhi);
      Range r1 = quotient_range(n1lo, n1hi, m);
      // lambda2 = (g1[i]*v - g1[j]*u) / m
      Int n2lo = 0, n2hi = 0;
      add_scaled(n2lo, n2hi, g1[i], vlo, vhi);
      add_scaled(n2lo, n2hi, -g1[j], ulo, uhi);
      Range r2 = quotient_range(n2lo, n2hi, m);
      for (Int l1 = r1.lo; l1 <= r1.hi; ++l1) {
        for (Int l2 = r2.lo; l2 <= r2.hi; ++l2) {
          Vec3 p = offset_point(set, {l1, l2});
          if (region.admits(p)) out.push_back(p);
        }
      }
      break;
    }
    default: {
      Vec3 p;
      for (p[0] = region.box[0].lo; p[0] <= region.box[0].hi; ++p[0])
        for (p[1] = region.box[1].lo; p[1] <= region.box[1].hi; ++p[1])
          for (p[2] = region.box[2].lo; p[2] <= region.box[2].hi; ++p[2])
            if (contains(set, p) && region.admits(p)) out.push_back(p);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec2> enumerate_points(const SolutionSet2& set,
                                   const std::array<Interval, 2>& box) {
  std::vector<Vec2> out;
  if (!set.solvable) return out;
  auto in_box = [&](const Vec2& p) {
    return p[0] >= box[0].lo && p[0] <= box[0].hi && p[1] >= box[1].lo &&
           p[1] <= box[1].hi;
  };
  switch (set.rank()) {
    case 0:
      if (in_box(set.base)) out.push_back(set.base);
      break;
    case 1: {
      const Vec2& g = set.generators[0];
      Range r{std::numeric_limits<Int>::min(), std::numeric_limits<Int>::max()};
      bool feasible = true;
      for (int i = 0; i < 2 && feasible; ++i) {
        Int lo = checked_sub(box[i].lo, set.base[i]);
        Int hi = checked_sub(box[i].hi, set.base[i]);
        if (g[i] == 0) {
          feasible = lo <= 0 && 0 <= hi;
        } else {
          r = intersect(r, quotient_range(lo, hi, g[i]));
        }
      }
      if (!feasible) break;
      for (Int l = r.lo; l <= r.hi; ++l) {
        Vec2 p = {checked_add(set.base[0], checked_mul(l, g[0])),
                  checked_add(set.base[1], checked_mul(l, g[1]))};
        if (in_box(p)) out.push_back(p);
      }
      break;
    }
    default: {
      Vec2 p;
      for (p[0] = box[0].lo; p[0] <= box[0].hi; ++p[0])
        for (p[1] = box[1].lo; p[1] <= box[1].hi; ++p[1])
          if (contains(set, p)) out.push_back(p);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_points(const SolutionSet3& set, const Region& region) {
  return enumerate_points(set, region).size();
}

bool semantically_equal(const SolutionSet3& a, const SolutionSet3& b) {
  if (!a.solvable || !b.solvable) return a.solvable == b.solvable;
  if (a.rank() != b.rank()) return false;
  auto included = [](const SolutionSet3& sub, const SolutionSet3& super) {
    if (!contains(super, sub.base)) return false;
    for (const Vec3& g : sub.generators) {
      Vec3 p;
      for (int i = 0; i < 3; ++i) p[i] = checked_add(sub.base[i], g[i]);
      if (!contains(super, p)) return false;
    }
    return true;
  };
  return included(a, b) && included(b, a);
}

}  // namespace dio
