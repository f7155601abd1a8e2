#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "latcol/error.hpp"

namespace latcol {

using Int = std::int64_t;

// Largest coordinate magnitude accepted for lattice points. Keeps every
// cross product of coordinate differences inside int64.
inline constexpr Int kCoordLimit = Int{1} << 30;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw RangeError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw RangeError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw RangeError("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

inline Int narrow(__int128 v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw RangeError("integer overflow in narrowing");
  return static_cast<Int>(v);
}

}  // namespace checked

// Floor and ceiling of a/b for b != 0, rounding toward -inf / +inf.
constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

// Euclidean remainder, always in [0, |b|).
constexpr Int euclid_mod(Int a, Int b) {
  Int r = a % b;
  if (r < 0) r += (b < 0 ? -b : b);
  return r;
}

inline void require_coord(Int v, const char* what) {
  if (v > kCoordLimit || v < -kCoordLimit)
    throw RangeError(std::string(what) + " coordinate " + std::to_string(v) +
                     " outside [-2^30, 2^30]");
}

}  // namespace latcol
