#include "dio/types.hpp"

namespace dio {

bool Equation3::satisfied_by(const Vec3& p) const {
  Int lhs = checked_add(checked_add(checked_mul(a, p[0]), checked_mul(b, p[1])),
                        checked_mul(c, p[2]));
  return lhs == d;
}

std::string_view to_string(Case3 c) {
  switch (c) {
    case Case3::Formula1: return "formula-1";
    case Case3::Formula2AB: return "formula-2(a,b)";
    case Case3::Formula2BC: return "formula-2(b,c)";
    case Case3::Formula2AC: return "formula-2(a,c)";
    case Case3::Formula3: return "formula-3";
    case Case3::BGroup1: return "b-group-1";
    case Case3::BGroup2: return "b-group-2";
    case Case3::BGroup3: return "b-group-3";
    case Case3::UnsolvableDivisibility: return "unsolvable-divisibility";
  }
  return "?";
}

std::string to_string(const SystemTag& tag) {
  std::string s;
  switch (tag.kind) {
    case SysCase::RowContradiction: s = "row-contradiction"; break;
    case SysCase::SingleEquation: s = "single-equation"; break;
    case SysCase::Proportional: s = "formula-4-proportional"; break;
    case SysCase::C1Group1: s = "c-group-1"; break;
    case SysCase::C1Group2: s = "c-group-2"; break;
    case SysCase::C1Group3: s = "c-group-3"; break;
    case SysCase::C2Chart: s = "c-three-zeros"; break;
    case SysCase::C3Chart: s = "c-four-zeros"; break;
    case SysCase::General: s = "formula-4-general"; break;
  }
  if (tag.rows_swapped) s += "+swap";
  if (tag.equation_case) {
    s += '/';
    s += to_string(*tag.equation_case);
  }
  return s;
}

}  // namespace dio
