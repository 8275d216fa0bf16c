#pragma once

#include <functional>
#include <span>
#include <vector>

#include "xyzlab/int128.hpp"

namespace xyzlab {

/// Exactly the primes <= bound, ascending.
struct PrimeTable {
  u64 bound = 0;
  std::vector<u64> primes;
};

/// The sorted set S(y) ∩ [1, x]; 1 is always a member.
struct SmoothSet {
  u64 x_bound = 0;
  u64 y_bound = 0;
  std::vector<u64> members;
};

/// Runtime caps shared by enumeration and counting.
struct Limits {
  u64 member_cap = 100'000'000;  // enumeration refuses larger sets
};

/// Sieve of Eratosthenes. Flat table; bound capped at 1e9 (use the segmented
/// iterator beyond that).
PrimeTable primes_upto(u64 y);

/// Number of primes <= y without storing them (flat sieve).
u64 prime_count_upto(u64 y);

/// Streams primes in [lo, hi] ascending through fn via a segmented sieve.
/// Supports hi up to 2^40.
void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn);

/// Marks composites among odd numbers in [lo, lo + 2*nbits) given odd base
/// primes <= sqrt of the segment end. bits[i] set <=> lo + 2i composite.
/// lo must be odd. Low-level building block for streaming passes.
void sieve_odd_segment(u64 lo, u64 nbits, std::span<const u32> odd_base_primes,
                       std::vector<u64>& bits);

/// Depth-first products over the prime table; refused (TooLarge) when the
/// predicted count exceeds limits.member_cap. Members are sorted.
SmoothSet enumerate_smooth(u64 x, u64 y, const Limits& limits = {});

/// Psi(x, y), computed by two independent routes (multiply-up product walk and
/// divide-down lattice recursion) that must agree. The member cap doubles as a
/// work budget.
u128 psi_exact(u128 x, u64 y, const Limits& limits = {});

/// Chebyshev theta: sum of log p over p <= y, ascending summation order.
double theta(u64 y);

}  // namespace xyzlab
