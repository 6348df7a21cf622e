#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dio/int_arith.hpp"

namespace dio {

using Vec2 = std::array<Int, 2>;
using Vec3 = std::array<Int, 3>;

// One linear equation a*x + b*y = c.
struct Equation2 {
  Int a = 0, b = 0, c = 0;
};

// One linear equation a*x + b*y + c*z = d.
struct Equation3 {
  Int a = 0, b = 0, c = 0, d = 0;

  Int coeff(int axis) const { return axis == 0 ? a : axis == 1 ? b : c; }
  Int& coeff(int axis) { return axis == 0 ? a : axis == 1 ? b : c; }
  bool satisfied_by(const Vec3& p) const;
};

struct System2x3 {
  Equation3 row1, row2;
};

// Why a solution set is empty: divides(divisor, target) failed.
struct EmptyReason {
  Int divisor = 0;
  Int target = 0;
};

// Affine lattice of integer pairs: base + sum(lambda_i * gen_i).
struct SolutionSet2 {
  bool solvable = false;
  EmptyReason reason{};  // meaningful only when !solvable
  Vec2 base{};
  std::vector<Vec2> generators;  // linearly independent, 0..2 of them

  int rank() const { return static_cast<int>(generators.size()); }

  static SolutionSet2 none(Int divisor, Int target) {
    SolutionSet2 s;
    s.reason = {divisor, target};
    return s;
  }
  static SolutionSet2 lattice(Vec2 base, std::vector<Vec2> gens) {
    SolutionSet2 s;
    s.solvable = true;
    s.base = base;
    s.generators = std::move(gens);
    return s;
  }
};

// Affine lattice of integer triples: base + sum(lambda_i * gen_i).
struct SolutionSet3 {
  bool solvable = false;
  EmptyReason reason{};
  Vec3 base{};
  std::vector<Vec3> generators;  // linearly independent, 0..3 of them

  int rank() const { return static_cast<int>(generators.size()); }

  static SolutionSet3 none(Int divisor, Int target) {
    SolutionSet3 s;
    s.reason = {divisor, target};
    return s;
  }
  static SolutionSet3 lattice(Vec3 base, std::vector<Vec3> gens) {
    SolutionSet3 s;
    s.solvable = true;
    s.base = base;
    s.generators = std::move(gens);
    return s;
  }
};

// Which solver path produced a single-equation result.
enum class Case3 {
  Formula1,
  Formula2AB,
  Formula2BC,
  Formula2AC,
  Formula3,
  BGroup1,  // exactly one zero coefficient
  BGroup2,  // exactly two zero coefficients
  BGroup3,  // all coefficients zero
  UnsolvableDivisibility,
};

std::string_view to_string(Case3 c);

// Which path produced a system result.
enum class SysCase {
  RowContradiction,  // a row reduced to 0 = k (k != 0) or failed its gcd test
  SingleEquation,    // degenerate 0 = 0 row(s) dropped
  Proportional,      // rows proportional by epsilon = +-1
  C1Group1,          // two zeros, same column
  C1Group2,          // two zeros, same row
  C1Group3,          // two zeros, neither same row nor column
  C2Chart,           // three zeros
  C3Chart,           // four zeros
  General,           // full determinant-invariant path
};

struct SystemTag {
  SysCase kind = SysCase::General;
  bool rows_swapped = false;
  // Set when the system collapsed to a single equation and was delegated.
  std::optional<Case3> equation_case;
};

std::string to_string(const SystemTag& tag);

}  // namespace dio
