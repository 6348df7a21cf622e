#pragma once

#include <utility>

#include "dio/types.hpp"

namespace dio {

// Complete integer solution set of a*x + b*y + c*z = d, with the case tag
// naming the dispatch path that produced it.
std::pair<SolutionSet3, Case3> solve3(const Equation3& eq);

// Unit-coefficient path: some |coefficient| is 1 and the equation is solved
// for that variable. Precondition violation throws std::invalid_argument.
SolutionSet3 solve3_unit(const Equation3& eq);

// Coprime-pair path: (a, b, c) = 1, all |coefficients| > 1, and at least one
// of (a,b), (b,c), (a,c) equals 1. Pairs are tried in that fixed order; the
// chosen pair is reported through the Case3.
std::pair<SolutionSet3, Case3> solve3_coprime_pair(const Equation3& eq);

// Two-stage path: (a, b, c) = 1, all |coefficients| > 1, every pairwise gcd
// > 1. Reduces through delta = (a, b) and the auxiliary equation
// delta*t + c*z = d.
SolutionSet3 solve3_general(const Equation3& eq);

}  // namespace dio
