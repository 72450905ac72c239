#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gaskit {

/// Objective-function coefficients are exact 64-bit signed integers.
/// Overflow is a hard error everywhere; nothing in the toolkit wraps silently.
using Coeff = std::int64_t;

class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in sub");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
  return r;
}

inline Coeff checked_neg(Coeff a) { return checked_sub(0, a); }

}  // namespace gaskit
