#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dio/types.hpp"

namespace dio {

struct Interval {
  Int lo = 0, hi = 0;  // closed; lo <= hi
};

struct Ball {
  Vec3 center{};
  Int radius_squared = 0;
};

using Predicate = std::function<bool(const Vec3&)>;

// Finite box, optionally intersected with a ball and/or a decidable point
// predicate (both applied as filters after box enumeration).
struct Region {
  std::array<Interval, 3> box{};
  std::optional<Ball> ball;
  Predicate predicate;  // empty = no constraint

  bool admits(const Vec3& p) const;
};

// x, y, z > 0.
Predicate positive_predicate();
// x, y, z are the side lengths of a (nondegenerate) triangle.
Predicate triangle_predicate();

// Exact affine-lattice membership.
bool contains(const SolutionSet3& set, const Vec3& p);
bool contains(const SolutionSet2& set, const Vec2& p);

// All points of the set inside the region, lexicographically sorted.
// Parameter ranges come from exact interval propagation, so the result is
// complete.
std::vector<Vec3> enumerate_points(const SolutionSet3& set, const Region& region);
std::vector<Vec2> enumerate_points(const SolutionSet2& set,
                                   const std::array<Interval, 2>& box);

std::size_t count_points(const SolutionSet3& set, const Region& region);

// Mutual containment of bases and generators; decides equality of the two
// affine lattices semantically, never syntactically.
bool semantically_equal(const SolutionSet3& a, const SolutionSet3& b);

}  // namespace dio
