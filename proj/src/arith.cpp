#include "xyzlab/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace xyzlab {

Factorization factorize(u128 n, u64 trial_bound) {
  if (n < 1) throw InvalidInput("factorize: n must be positive");
  if (trial_bound < 2) throw InvalidInput("factorize: trial_bound must be >= 2");
  Factorization f;
  f.value = n;
  if (n == 1) return f;

  u128 m = n;
  auto strip = [&](u128 p) {
    u32 e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) f.factors.push_back({p, e});
  };
  strip(2);
  for (u128 d = 3; d <= trial_bound && d * d <= m; d += 2) strip(d);

  if (m > 1) {
    // The cofactor has no factor <= min(trial_bound, sqrt m), so it is prime
    // exactly when it is <= trial_bound^2; larger cofactors stay uncertified.
    u128 tb2 = u128(trial_bound) * u128(trial_bound);
    if (m > tb2)
      throw NotFullyFactored("cofactor " + to_string(m) + " exceeds trial_bound^2");
    f.factors.push_back({m, 1});
  }
  return f;
}

Factorization factorize_with_primes(u128 n, std::span<const u64> primes) {
  if (n < 1) throw InvalidInput("factorize_with_primes: n must be positive");
  Factorization f;
  f.value = n;
  u128 m = n;
  for (u64 p : primes) {
    if (m == 1) break;
    if (u128(p) * p > m) break;
    u32 e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) f.factors.push_back({p, e});
  }
  if (m > 1) {
    // leftover is prime and exceeds every stripped prime; it must lie in the
    // table for n to be smooth over it
    if (primes.empty() || m > u128(primes.back()))
      throw NotFullyFactored("not smooth over the given prime table");
    f.factors.push_back({m, 1});
  }
  return f;
}

Triple canonicalize(i128 a, i128 b, i128 c, u64 trial_bound) {
  if (a == 0 || b == 0 || c == 0) throw Degenerate("zero entry in triple");
  const std::array<i128, 3> v{a, b, c};
  int npos = 0, nneg = 0;
  for (i128 t : v) (t > 0 ? npos : nneg)++;
  if (npos == 0 || nneg == 0) throw Degenerate("entries do not sum to zero");

  u128 pos = 0, neg = 0;
  for (i128 t : v) {
    if (t > 0)
      pos += u128(t);
    else
      neg += u128(0) - u128(t);  // magnitude, two's complement safe at -2^127
  }
  if (pos != neg) throw Degenerate("entries do not sum to zero");

  // the lone-signed entry has the largest magnitude and becomes z
  u128 z = pos;
  u128 x = 0, y = 0;
  bool first = true;
  for (i128 t : v) {
    bool majority = (npos == 2) ? (t > 0) : (t < 0);
    if (!majority) continue;
    u128 mag = t > 0 ? u128(t) : u128(0) - u128(t);
    if (first) {
      x = mag;
      first = false;
    } else {
      y = mag;
    }
  }
  if (x > y) std::swap(x, y);

  Triple t;
  t.x = x;
  t.y = y;
  t.z = z;
  t.primitive = gcd_u128(x, y) == 1;
  t.fx = factorize(x, trial_bound);
  t.fy = factorize(y, trial_bound);
  t.fz = factorize(z, trial_bound);
  return t;
}

Triple triple_from_parts(u64 x, u64 y, u64 z, std::span<const u64> primes) {
  Triple t;
  t.x = x;
  t.y = y;
  t.z = z;
  t.primitive = std::gcd(x, y) == 1;
  t.fx = factorize_with_primes(x, primes);
  t.fy = factorize_with_primes(y, primes);
  t.fz = factorize_with_primes(z, primes);
  return t;
}

namespace {

// merged distinct primes of the three factorizations, ascending
std::vector<u128> distinct_primes(const Triple& t) {
  std::vector<u128> ps;
  for (const Factorization* f : {&t.fx, &t.fy, &t.fz})
    for (const PrimePower& pp : f->factors) ps.push_back(pp.prime);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

}  // namespace

u128 radical(const Triple& t) {
  u128 r = 1;
  for (u128 p : distinct_primes(t)) r = checked_mul(r, p);
  return r;
}

TripleMetrics metrics(const Triple& t) {
  if (t.z < 3) throw HeightTooSmall("kappa0/Q* need H >= 3");
  TripleMetrics m;
  m.height = t.z;
  m.radical = radical(t);
  m.smoothness = 0;
  for (const Factorization* f : {&t.fx, &t.fy, &t.fz})
    m.smoothness = std::max(m.smoothness, f->largest_prime());
  const double log_h = log_u128(m.height);
  const double loglog_h = std::log(log_h);
  const double log_s = log_u128(m.smoothness);
  m.kappa0 = log_s / loglog_h;
  m.qstar = 1.5 * loglog_h / log_s;
  m.kappa1 = log_u128(m.radical) / log_h;
  return m;
}

int mobius(const Factorization& f) {
  for (const PrimePower& pp : f.factors)
    if (pp.exponent > 1) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

u128 euler_phi(const Factorization& f) {
  u128 phi = 1;
  for (const PrimePower& pp : f.factors) {
    phi = checked_mul(phi, pp.prime - 1);
    for (u32 e = 1; e < pp.exponent; ++e) phi = checked_mul(phi, pp.prime);
  }
  return phi;
}

}  // namespace xyzlab
