#pragma once

#include <span>
#include <vector>

#include "dio/lattice_set.hpp"
#include "dio/types.hpp"

namespace dio {

struct CapExceededError : std::runtime_error {
  Int volume;
  explicit CapExceededError(Int volume);
};

inline constexpr Int kDefaultOracleCap = 100'000'000;

// Exhaustive scan of the region's box: every point satisfying all equations
// and the region's filters, lexicographically sorted. Deliberately naive;
// this is the ground truth the solvers are checked against.
std::vector<Vec3> brute_force(std::span<const Equation3> equations,
                              const Region& region,
                              Int cap = kDefaultOracleCap);

}  // namespace dio
