#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "stanley/error.hpp"

namespace stanley {

/// All set elements, moduli and sequence terms are nonnegative 64-bit values.
using value_t = std::uint64_t;

inline value_t checked_add(value_t a, value_t b) {
  value_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw error(error_kind::overflow, std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline value_t checked_mul(value_t a, value_t b) {
  value_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw error(error_kind::overflow, std::to_string(a) + " * " + std::to_string(b));
  return r;
}

inline value_t checked_sub(value_t a, value_t b) {
  if (b > a)
    throw error(error_kind::overflow, std::to_string(a) + " - " + std::to_string(b) + " underflows");
  return a - b;
}

inline value_t checked_pow(value_t base, unsigned exp) {
  value_t r = 1;
  while (exp-- > 0) r = checked_mul(r, base);
  return r;
}

inline constexpr bool is_power_of_two(value_t v) noexcept { return v != 0 && (v & (v - 1)) == 0; }

// (2y - x) mod n without leaving the unsigned range. Requires n < 2^62.
inline constexpr value_t mod_2y_minus_x(value_t x, value_t y, value_t n) noexcept {
  return (2 * (y % n) + n - x % n) % n;
}

// Exponent of 3 in v (v > 0), and the 3-free cofactor.
struct three_adic {
  unsigned exponent;
  value_t cofactor;
};

inline constexpr three_adic split_powers_of_three(value_t v) noexcept {
  unsigned e = 0;
  while (v != 0 && v % 3 == 0) {
    v /= 3;
    ++e;
  }
  return {e, v};
}

}  // namespace stanley
