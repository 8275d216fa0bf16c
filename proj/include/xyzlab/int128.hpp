#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "xyzlab/errors.hpp"

namespace xyzlab {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u128 U128_MAX = ~static_cast<u128>(0);

std::string to_string(u128 v);
std::string to_string(i128 v);

/// Parses a decimal unsigned integer; throws Overflow past 2^128-1,
/// InvalidInput on malformed text.
u128 parse_u128(std::string_view s);

/// Parses a decimal signed integer with optional leading '-'.
i128 parse_i128(std::string_view s);

inline u128 checked_mul(u128 a, u128 b) {
  u128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("product exceeds 128 bits");
  return r;
}

inline u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// log of a u128 as double; exact enough for metric work (value >= 1).
inline double log_u128(u128 v) { return std::log(static_cast<double>(v)); }

}  // namespace xyzlab
