#pragma once

#include <optional>

#include "dio/types.hpp"

namespace dio {

// Particular solution of a*x + b*y = c by Euclidean descent with
// back-substitution. Requires a != 0 and b != 0; returns absent when
// gcd(a, b) does not divide c.
std::optional<Vec2> particular_solution2(const Equation2& eq);

// Complete integer solution set of a*x + b*y = c, including the
// zero-coefficient cases. The rank-1 generator is (b/g, -a/g) normalized so
// its first nonzero component is positive.
SolutionSet2 solve2(const Equation2& eq);

}  // namespace dio
