#pragma once

#include <cstdint>

#include "affwt/error.hpp"

namespace affwt {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

/// Floor division for a positive divisor.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

}  // namespace affwt
