#pragma once

#include <utility>

#include "dio/types.hpp"

namespace dio {

// Determinant invariants of a 2x3 system (nonproportional, gcd-1 rows,
// c1 != 0, and not both D2 = D3 = 0; callers swap rows first when needed).
struct SystemInvariants {
  Int D1 = 0;   // a1*b2 - a2*b1
  Int D2 = 0;   // b1*c2 - b2*c1
  Int D3 = 0;   // a1*c2 - a2*c1
  Int D = 0;    // d1*c2 - d2*c1
  Int D23 = 0;  // gcd(D2, D3), positive
  Int delta = 0;  // gcd(c1*D1/D23, c1), positive
};

// Throws std::invalid_argument when the preconditions above are violated.
SystemInvariants system_invariants(const System2x3& sys);

// Eliminates z: returns the equation D3*x + D2*y = D whose integer solutions
// are exactly the (x, y)-projections of the system's solutions. Same
// preconditions as system_invariants.
Equation2 planar_reduction(const System2x3& sys);

// Complete integer solution set of the 2x3 system.
std::pair<SolutionSet3, SystemTag> solve_system(const System2x3& sys);

}  // namespace dio
