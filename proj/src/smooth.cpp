#include "xyzlab/smooth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace xyzlab {

namespace {

constexpr u64 kFlatSieveCap = 1'000'000'000;  // beyond this, stream segments
constexpr u64 kStreamCap = u64(1) << 40;

std::vector<u64> flat_sieve_bits(u64 y) {
  // bit i represents the odd number 2i+1; bit 0 (the number 1) is composite
  u64 nbits = y / 2 + 1;
  std::vector<u64> bits((nbits + 63) / 64, 0);
  bits[0] |= 1;  // 1 is not prime
  for (u64 p = 3; p * p <= y; p += 2) {
    if (bits[(p / 2) / 64] >> ((p / 2) % 64) & 1) continue;
    for (u64 m = p * p; m <= y; m += 2 * p) bits[(m / 2) / 64] |= u64(1) << ((m / 2) % 64);
  }
  return bits;
}

}  // namespace

PrimeTable primes_upto(u64 y) {
  if (y > kFlatSieveCap) throw TooLarge("primes_upto is flat-table only; use for_each_prime");
  PrimeTable t;
  t.bound = y;
  if (y < 2) return t;
  auto bits = flat_sieve_bits(y);
  t.primes.push_back(2);
  for (u64 n = 3; n <= y; n += 2)
    if (!(bits[(n / 2) / 64] >> ((n / 2) % 64) & 1)) t.primes.push_back(n);
  return t;
}

u64 prime_count_upto(u64 y) {
  if (y > kFlatSieveCap) throw TooLarge("prime_count_upto bound too large");
  if (y < 2) return 0;
  auto bits = flat_sieve_bits(y);
  u64 count = 1;  // the prime 2
  u64 nbits = (y + 1) / 2;  // odds <= y
  for (size_t w = 0; w < bits.size(); ++w) {
    u64 word = ~bits[w];
    // mask off bits beyond nbits in the last word
    if ((w + 1) * 64 > nbits) {
      u64 keep = nbits - w * 64;
      word &= (keep == 64) ? ~u64(0) : ((u64(1) << keep) - 1);
    }
    count += u64(std::popcount(word));
  }
  return count;
}

void sieve_odd_segment(u64 lo, u64 nbits, std::span<const u32> odd_base_primes,
                       std::vector<u64>& bits) {
  bits.assign((nbits + 63) / 64, 0);
  const u64 hi = lo + 2 * nbits;  // exclusive
  for (u32 p32 : odd_base_primes) {
    const u64 p = p32;
    if (p * p >= hi) break;
    u64 start = p * p;
    if (start < lo) {
      u64 k = (lo + p - 1) / p;
      if (k % 2 == 0) ++k;  // odd multiples only
      start = k * p;
      if (start < lo) start += 2 * p;
    }
    for (u64 m = start; m < hi; m += 2 * p) {
      u64 i = (m - lo) / 2;
      bits[i / 64] |= u64(1) << (i % 64);
    }
  }
}

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn) {
  if (hi > kStreamCap) throw TooLarge("prime streaming capped at 2^40");
  if (hi < lo || hi < 2) return;
  if (lo <= 2) fn(2);
  u64 start = std::max<u64>(lo, 3);
  if (start % 2 == 0) ++start;

  u64 root = u64(std::sqrt(double(hi))) + 2;
  auto base_tbl = primes_upto(root);
  std::vector<u32> base;
  for (u64 p : base_tbl.primes)
    if (p >= 3) base.push_back(u32(p));

  constexpr u64 kSegBits = u64(1) << 22;  // 4 Mbit -> 8M numbers per segment
  std::vector<u64> bits;
  for (u64 seg_lo = start; seg_lo <= hi; seg_lo += 2 * kSegBits) {
    u64 nbits = std::min(kSegBits, (hi - seg_lo) / 2 + 1);
    sieve_odd_segment(seg_lo, nbits, base, bits);
    for (u64 w = 0; w < bits.size(); ++w) {
      u64 word = ~bits[w];
      if ((w + 1) * 64 > nbits) {
        u64 keep = nbits - w * 64;
        word &= (keep == 64) ? ~u64(0) : ((u64(1) << keep) - 1);
      }
      while (word) {
        int b = std::countr_zero(word);
        word &= word - 1;
        u64 n = seg_lo + 2 * (w * 64 + u64(b));
        if (n > 1) fn(n);
      }
    }
  }
}

namespace {

// count of integers <= x composed of primes[0..i), divide-down recursion
u128 count_division(u128 x, size_t i, std::span<const u64> primes, u64& budget) {
  if (x == 0) return 0;
  if (budget-- == 0) throw TooLarge("smooth count exceeds the configured work budget");
  u128 total = 1;  // n = 1
  for (size_t k = 0; k < i; ++k) {
    u64 p = primes[k];
    if (u128(p) > x) break;
    total += count_division(x / p, k + 1, primes, budget);
  }
  return total;
}

// multiply-up product walk; calls visit(n) for every smooth n <= x
template <class Visit>
void walk_products(u128 x, std::span<const u64> primes, u64& budget, u128 val, size_t idx,
                   const Visit& visit) {
  if (budget-- == 0) throw TooLarge("smooth enumeration exceeds the configured cap");
  visit(val);
  for (size_t i = idx; i < primes.size(); ++i) {
    u64 p = primes[i];
    if (val > x / p) break;
    walk_products(x, primes, budget, val * p, i, visit);
  }
}

}  // namespace

SmoothSet enumerate_smooth(u64 x, u64 y, const Limits& limits) {
  if (x < 1) throw InvalidInput("enumerate_smooth: x must be >= 1");
  if (y < 2) throw InvalidInput("enumerate_smooth: y must be >= 2");
  auto table = primes_upto(y);

  // predict the count first so oversized requests are refused before allocating
  u64 budget = limits.member_cap + 1;
  u128 predicted = count_division(x, table.primes.size(), table.primes, budget);
  if (predicted > limits.member_cap) throw TooLarge("smooth set larger than member cap");

  SmoothSet s;
  s.x_bound = x;
  s.y_bound = y;
  s.members.reserve(size_t(predicted));
  u64 walk_budget = limits.member_cap + 1;
  walk_products(u128(x), table.primes, walk_budget, 1, 0,
                [&](u128 v) { s.members.push_back(u64(v)); });
  std::sort(s.members.begin(), s.members.end());
  return s;
}

u128 psi_exact(u128 x, u64 y, const Limits& limits) {
  if (x < 1) throw InvalidInput("psi_exact: x must be >= 1");
  if (y < 2) throw InvalidInput("psi_exact: y must be >= 2");
  if (u128(y) >= x) return x;  // every integer <= x is y-smooth
  auto table = primes_upto(y);

  u64 budget_a = limits.member_cap + 1;
  u128 by_products = 0;
  walk_products(x, table.primes, budget_a, 1, 0, [&](u128) { ++by_products; });

  u64 budget_b = limits.member_cap + 1;
  u128 by_division = count_division(x, table.primes.size(), table.primes, budget_b);

  if (by_products != by_division)
    throw Error("psi_exact: enumeration and lattice counts disagree");
  return by_products;
}

double theta(u64 y) {
  if (y < 2) throw InvalidInput("theta: y must be >= 2");
  double acc = 0;
  if (y <= kFlatSieveCap) {
    auto table = primes_upto(y);
    for (u64 p : table.primes) acc += std::log(double(p));
  } else {
    for_each_prime(2, y, [&](u64 p) { acc += std::log(double(p)); });
  }
  return acc;
}

}  // namespace xyzlab
