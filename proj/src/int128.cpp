#include "xyzlab/int128.hpp"

#include <algorithm>

namespace xyzlab {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string(i128 v) {
  if (v >= 0) return to_string(static_cast<u128>(v));
  return "-" + to_string(static_cast<u128>(0) - static_cast<u128>(v));
}

u128 parse_u128(std::string_view s) {
  if (s.empty()) throw InvalidInput("empty integer literal");
  u128 v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw InvalidInput("bad digit in integer literal");
    u128 d = u128(ch - '0');
    if (v > (U128_MAX - d) / 10) throw Overflow("integer literal exceeds 128 bits");
    v = v * 10 + d;
  }
  return v;
}

i128 parse_i128(std::string_view s) {
  bool neg = !s.empty() && s.front() == '-';
  if (neg) s.remove_prefix(1);
  u128 mag = parse_u128(s);
  const u128 lim = static_cast<u128>(1) << 127;
  if (neg) {
    if (mag > lim) throw Overflow("integer literal exceeds 128 bits");
    return -static_cast<i128>(mag - (mag == lim ? 1 : 0)) - (mag == lim ? 1 : 0);
  }
  if (mag >= lim) throw Overflow("integer literal exceeds 128 bits");
  return static_cast<i128>(mag);
}

}  // namespace xyzlab
