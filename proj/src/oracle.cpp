#include "dio/oracle.hpp"

#include <string>

namespace dio {

CapExceededError::CapExceededError(Int vol)
    : std::runtime_error("oracle box volume " + std::to_string(vol) +
                         " exceeds the scan cap"),
      volume(vol) {}

std::vector<Vec3> brute_force(std::span<const Equation3> equations,
                              const Region& region, Int cap) {
  Int volume = 1;
  for (const Interval& iv : region.box) {
    Int width = checked_add(checked_sub(iv.hi, iv.lo), 1);
    volume = checked_mul(volume, width);
  }
  if (volume > cap) throw CapExceededError(volume);

  std::vector<Vec3> out;
  Vec3 p;
  for (p[0] = region.box[0].lo; p[0] <= region.box[0].hi; ++p[0]) {
    for (p[1] = region.box[1].lo; p[1] <= region.box[1].hi; ++p[1]) {
      for (p[2] = region.box[2].lo; p[2] <= region.box[2].hi; ++p[2]) {
        bool ok = true;
        for (const Equation3& eq : equations) {
          if (!eq.satisfied_by(p)) {
            ok = false;
            break;
          }
        }
        if (ok && region.admits(p)) out.push_back(p);
      }
    }
  }
  return out;  // already lexicographic by loop order
}

}  // namespace dio
