#pragma once

#include <span>
#include <utility>
#include <vector>

#include "xyzlab/int128.hpp"

namespace xyzlab {

struct PrimePower {
  u128 prime = 0;
  u32 exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its prime factorization.
/// Invariants: primes strictly increasing, exponents >= 1, the product of
/// prime^exponent equals value, and value == 1 iff factors is empty.
struct Factorization {
  u128 value = 1;
  std::vector<PrimePower> factors;

  u128 largest_prime() const { return factors.empty() ? 0 : factors.back().prime; }
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Canonical solution of x + y = z with 1 <= x <= y < z and cached factorizations.
struct Triple {
  u128 x = 0, y = 0, z = 0;
  Factorization fx, fy, fz;
  bool primitive = false;
};

struct TripleMetrics {
  u128 height = 0;      // H = z under canonical order
  u128 radical = 0;     // product of distinct primes dividing x*y*z
  u128 smoothness = 0;  // largest prime dividing x*y*z
  double kappa0 = 0;    // log S / log log H
  double kappa1 = 0;    // log R / log H
  double qstar = 0;     // (3/2) / kappa0
};

/// Trial division by 2 and odd candidates up to trial_bound. The cofactor left
/// after stripping is certified prime when it is <= trial_bound^2; a larger
/// cofactor raises NotFullyFactored.
Factorization factorize(u128 n, u64 trial_bound);

/// Factors n using only the given ascending prime list; NotFullyFactored if a
/// cofactor survives. Fast path for numbers known to be smooth.
Factorization factorize_with_primes(u128 n, std::span<const u64> primes);

/// Sign-normalizes and sorts a solution of a + b + c = 0 into the canonical
/// Triple. Degenerate if any entry is zero or the sum is nonzero.
Triple canonicalize(i128 a, i128 b, i128 c, u64 trial_bound = 1'000'000);

/// Builds a Triple from parts already in canonical order, factoring with the
/// given prime table.
Triple triple_from_parts(u64 x, u64 y, u64 z, std::span<const u64> primes);

/// All six per-triple measures. HeightTooSmall if z < 3 (log log H <= 0).
TripleMetrics metrics(const Triple& t);

/// Product of the distinct primes dividing x*y*z.
u128 radical(const Triple& t);

/// Moebius function of a squarefree-tested factorization: 0, 1 or -1.
int mobius(const Factorization& f);

/// Euler phi from a factorization.
u128 euler_phi(const Factorization& f);

}  // namespace xyzlab
