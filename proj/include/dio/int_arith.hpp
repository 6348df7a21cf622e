#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dio {

using Int = std::int64_t;

// Thrown whenever a fixed-width operation would wrap. All arithmetic in this
// library is exact; overflow is surfaced, never silently truncated.
struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

// Floor division; b != 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Ceiling division; b != 0.
inline Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

// Remainder in [0, |b|); b != 0.
inline Int mod_floor(Int a, Int b) {
  Int r = a % b;
  if (r < 0) r += (b < 0 ? -b : b);
  return r;
}

// Nonnegative gcd; gcd(0, 0) = 0.
Int gcd(Int a, Int b);

// Nonnegative gcd of three integers; equals gcd(gcd(a, b), c).
Int gcd3(Int a, Int b, Int c);

// divides(k, l) <=> l is an integer multiple of k. divides(0, l) <=> l == 0.
bool divides(Int k, Int l);

// Result of the extended Euclidean algorithm: a*x + b*y = g = gcd(a, b).
//
// Canonical representative: when b != 0 and g != 0, x is the minimal-|x|
// solution of a*x = g (mod |b|/g), ties broken toward nonnegative x, so
// |x| <= ceil(|b| / (2g)).
struct Bezout {
  Int g;  // gcd(a, b), >= 0
  Int x;
  Int y;
};

Bezout ext_gcd(Int a, Int b);

}  // namespace dio
