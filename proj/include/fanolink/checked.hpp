#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "fanolink/error.hpp"

namespace fanolink {

using Int = std::int64_t;
using Wide = __int128;

template <typename T>
concept CheckedInteger = std::same_as<T, Int> || std::same_as<T, Wide> ||
                         std::same_as<T, int>;

template <CheckedInteger T>
T checked_add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "integer overflow in addition");
  }
  return r;
}

template <CheckedInteger T>
T checked_sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
  }
  return r;
}

template <CheckedInteger T>
T checked_mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  }
  return r;
}

template <CheckedInteger T>
T checked_neg(T a) {
  return checked_sub(T{0}, a);
}

/// Narrow a wide value back to 64 bits, throwing Overflow if it does not fit.
inline Int narrow(Wide v) {
  if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN)) {
    throw Error(ErrorCode::Overflow, "value does not fit in 64 bits");
  }
  return static_cast<Int>(v);
}

/// Floor division and the matching nonnegative remainder (divisor > 0 or < 0).
template <CheckedInteger T>
constexpr T floor_div(T a, T b) {
  T q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

template <CheckedInteger T>
constexpr bool divides(T divisor, T value) {
  return divisor != 0 && value % divisor == 0;
}

/// Largest r with r*r <= n, for n >= 0.
Wide isqrt(Wide n);

std::string to_string_wide(Wide v);

}  // namespace fanolink
