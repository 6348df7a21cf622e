#include "dio/int_arith.hpp"

#include <cstdlib>
#include <limits>
#include <utility>

namespace dio {

namespace {

std::uint64_t magnitude(Int a) {
  return a < 0 ? ~static_cast<std::uint64_t>(a) + 1 : static_cast<std::uint64_t>(a);
}

Int to_int(std::uint64_t u) {
  if (u > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
    throw OverflowError("gcd does not fit in 64 bits");
  return static_cast<Int>(u);
}

}  // namespace

Int gcd(Int a, Int b) {
  std::uint64_t x = magnitude(a);
  std::uint64_t y = magnitude(b);
  while (y != 0) {
    std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  return to_int(x);
}

Int gcd3(Int a, Int b, Int c) { return gcd(gcd(a, b), c); }

bool divides(Int k, Int l) {
  if (k == 0) return l == 0;
  return l % k == 0;
}

Bezout ext_gcd(Int a, Int b) {
  if (a == 0 && b == 0) return {0, 0, 0};
  if (b == 0) return {checked_abs(a), a > 0 ? 1 : -1, 0};
  if (a == 0) return {checked_abs(b), 0, b > 0 ? 1 : -1};

  // Iterative extended Euclid on the magnitudes, signs restored afterwards.
  Int old_r = checked_abs(a), r = checked_abs(b);
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r = checked_sub(old_r, checked_mul(q, r));
    old_s = checked_sub(old_s, checked_mul(q, s));
    old_t = checked_sub(old_t, checked_mul(q, t));
    std::swap(r, old_r);
    std::swap(s, old_s);
    std::swap(t, old_t);
  }
  Int g = old_r;
  Int x = a < 0 ? -old_s : old_s;
  Int y = b < 0 ? -old_t : old_t;

  // Normalize to the minimal-|x| representative mod |b|/g, ties toward x >= 0.
  Int period = checked_abs(b) / g;
  if (period > 0) {
    x = mod_floor(x, period);
    if (x > period - x) x -= period;
    y = (g - checked_mul(a, x)) / b;
  }
  return {g, x, y};
}

}  // namespace dio
