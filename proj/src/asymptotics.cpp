#include "xyzlab/asymptotics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>

#include "xyzlab/parallel.hpp"
#include "xyzlab/smooth.hpp"

namespace xyzlab {

namespace {

constexpr u64 kDirectPrimeCap = 10'000'000;  // exact per-evaluation sums below this
constexpr u64 kStreamCap = u64(1) << 40;

/// Evaluator for sum of log p / (p^c - 1) over p <= y. Primes up to
/// kDirectPrimeCap are kept exactly; beyond that one streaming sieve pass
/// compresses them into narrow log-spaced buckets carrying the weighted
/// moments W_j = sum of log p * (p - m)^j, j = 0..3. Each evaluation then
/// costs O(|small| + |buckets|) and carries a rigorous Taylor remainder.
struct PrimeSumTable {
  u64 y = 0;
  std::vector<double> small_lnp;

  struct Bucket {
    double mid = 0;   // center of [lo, hi)
    double half = 0;  // half width
    double lo = 0;    // left edge: derivative bounds are largest here
    double w0 = 0, w1 = 0, w2 = 0, w3 = 0;
  };
  std::vector<Bucket> buckets;

  double eval(double c) const {
    double acc = 0;
    for (double lnp : small_lnp) acc += lnp / std::expm1(c * lnp);
    for (const Bucket& b : buckets) {
      // h(p) = 1/(p^c - 1) = sum_{k>=1} p^{-kc}, expanded to third order
      // around the bucket center against the moments W_j = sum ln p (p-mid)^j:
      // h^(j)(m) = sum_k (-kc)(-kc-1)...(-kc-j+1) m^{-kc-j}
      double m = b.mid;
      double mc = std::pow(m, c);
      double h0 = 1.0 / (mc - 1.0);
      double h1 = 0, h2 = 0, h3 = 0;
      double pkc = 1.0;
      for (int k = 1; k <= 64; ++k) {
        pkc /= mc;  // m^{-kc}
        double a = -double(k) * c;
        h1 += a * pkc / m;
        h2 += a * (a - 1.0) * pkc / (m * m);
        h3 += a * (a - 1.0) * (a - 2.0) * pkc / (m * m * m);
        if (pkc < 1e-22) break;
      }
      acc += h0 * b.w0 + h1 * b.w1 + 0.5 * h2 * b.w2 + (1.0 / 6.0) * h3 * b.w3;
    }
    return acc;
  }

  /// Bound on |true sum - eval(c)| from the fourth-order Taylor remainder,
  /// plus the log1p-polynomial slack folded in during the build.
  double taylor_remainder(double c) const {
    double bound = 0;
    for (const Bucket& b : buckets) {
      // |h''''(p)| <= 1.2 c(c+1)(c+2)(c+3) p^(-c-4) for p^c >= 2 (geometric
      // series, ratio p^-c <= 1e-2 at these sizes); evaluate at the left edge.
      double coef = 1.2 * c * (c + 1) * (c + 2) * (c + 3) * std::pow(b.lo, -c - 4.0);
      bound += (coef / 24.0) * b.w0 * b.half * b.half * b.half * b.half;
    }
    return 2.0 * bound + 1e-13;  // safety factor + per-prime log slack
  }
};

PrimeSumTable build_prime_sum_table(u64 y) {
  if (y > kStreamCap) throw TooLarge("saddle prime sums capped at 2^40");
  PrimeSumTable t;
  t.y = y;

  u64 direct = std::min(y, kDirectPrimeCap);
  {
    auto table = primes_upto(direct);
    t.small_lnp.reserve(table.primes.size());
    for (u64 p : table.primes) t.small_lnp.push_back(std::log(double(p)));
  }
  if (y <= kDirectPrimeCap) return t;

  // Log-spaced buckets over (direct, y], relative half-width kH. The Taylor
  // remainder scales like kH^4, comfortably below the 1e-9 log x budget.
  constexpr double kH = 8e-4;
  const double ratio = 1.0 + 2.0 * kH;
  std::vector<double> edges{double(direct) + 0.5};
  while (edges.back() < double(y) + 1.0) edges.push_back(edges.back() * ratio);
  edges.back() = double(y) + 0.5;
  const size_t nb = edges.size() - 1;
  t.buckets.resize(nb);
  for (size_t i = 0; i < nb; ++i) {
    t.buckets[i].lo = edges[i];
    t.buckets[i].mid = 0.5 * (edges[i] + edges[i + 1]);
    t.buckets[i].half = 0.5 * (edges[i + 1] - edges[i]);
  }

  // one streaming pass; segments are produced in parallel and committed in
  // segment order so the accumulation is bit-identical for any thread count
  const u64 lo0 = direct + 1;
  constexpr u64 kSegBits = u64(1) << 23;  // 16M numbers per segment
  const u64 span = y - lo0 + 1;
  const u64 n_segments = (span / 2 + kSegBits - 1) / kSegBits + 1;

  u64 root = u64(std::sqrt(double(y))) + 2;
  auto base_tbl = primes_upto(root);
  std::vector<u32> base;
  for (u64 p : base_tbl.primes)
    if (p >= 3) base.push_back(u32(p));

  struct SegMoments {
    size_t first_bucket = 0;
    std::vector<std::array<long double, 4>> w;
  };

  const double inv_log_ratio = 1.0 / std::log(ratio);
  const double log_edge0 = std::log(edges[0]);

  auto produce = [&](u64 seg) -> SegMoments {
    u64 seg_lo = lo0 + seg * 2 * kSegBits;
    if (seg_lo % 2 == 0) ++seg_lo;
    SegMoments out;
    if (seg_lo > y) return out;
    u64 nbits = std::min(kSegBits, (y - seg_lo) / 2 + 1);
    std::vector<u64> bits;
    sieve_odd_segment(seg_lo, nbits, base, bits);

    size_t bk = size_t(std::max(0.0, (std::log(double(seg_lo)) - log_edge0) * inv_log_ratio));
    if (bk >= nb) bk = nb - 1;
    while (bk > 0 && double(seg_lo) < edges[bk]) --bk;
    out.first_bucket = bk;

    auto ensure = [&](size_t idx) -> std::array<long double, 4>& {
      size_t rel = idx - out.first_bucket;
      if (out.w.size() <= rel) out.w.resize(rel + 1, {0.0L, 0.0L, 0.0L, 0.0L});
      return out.w[rel];
    };

    for (u64 w = 0; w < bits.size(); ++w) {
      u64 word = ~bits[w];
      if ((w + 1) * 64 > nbits) {
        u64 keep = nbits - w * 64;
        word &= (keep == 64) ? ~u64(0) : ((u64(1) << keep) - 1);
      }
      while (word) {
        int b = std::countr_zero(word);
        word &= word - 1;
        double p = double(seg_lo + 2 * (w * 64 + u64(b)));
        while (p >= edges[bk + 1]) ++bk;
        const auto& bucket = t.buckets[bk];
        double delta = p - bucket.mid;
        // ln p = ln mid + log1p(delta/mid); cubic log1p polynomial, error
        // <= (delta/mid)^4/4 ~ 1e-13 absolute, covered by taylor_remainder
        double u = delta / bucket.mid;
        double lnp = std::log(bucket.mid) + u * (1.0 - u * (0.5 - u / 3.0));
        auto& acc = ensure(bk);
        long double lp = lnp;
        acc[0] += lp;
        lp *= delta;
        acc[1] += lp;
        lp *= delta;
        acc[2] += lp;
        lp *= delta;
        acc[3] += lp;
      }
    }
    return out;
  };

  int threads = resolve_threads(0);
  parallel_ordered<SegMoments>(n_segments, threads, produce, [&](u64, const SegMoments& sm) {
    for (size_t i = 0; i < sm.w.size(); ++i) {
      auto& b = t.buckets[sm.first_bucket + i];
      b.w0 += double(sm.w[i][0]);
      b.w1 += double(sm.w[i][1]);
      b.w2 += double(sm.w[i][2]);
      b.w3 += double(sm.w[i][3]);
    }
  });
  return t;
}

}  // namespace

double saddle_sum(double c, u64 y) {
  if (!(c > 0)) throw InvalidInput("saddle_sum: c must be positive");
  if (y < 2) return 0;
  if (y > kStreamCap) throw TooLarge("saddle_sum capped at 2^40");
  double acc = 0;
  if (y <= 100'000'000) {
    auto table = primes_upto(y);
    for (u64 p : table.primes) acc += std::log(double(p)) / (std::pow(double(p), c) - 1.0);
  } else {
    for_each_prime(2, y, [&](u64 p) {
      acc += std::log(double(p)) / (std::pow(double(p), c) - 1.0);
    });
  }
  return acc;
}

SaddlePoint saddle_point(double x, u64 y, double bracket_lo, double bracket_hi) {
  if (!(x >= 2)) throw InvalidInput("saddle_point: x must be >= 2");
  if (y < 2) throw InvalidInput("saddle_point: y must be >= 2");
  const double target = std::log(x);
  const double tol = 1e-9 * target;

  PrimeSumTable table = build_prime_sum_table(y);
  auto g = [&](double c) { return table.eval(c); };

  double lo = std::min(bracket_lo, bracket_hi);
  double hi = std::max(bracket_lo, bracket_hi);
  if (!(lo > 0)) lo = 1e-3;
  // g decreases in c: g(lo) must sit above the target, g(hi) below
  int guard = 0;
  while (g(lo) < target) {
    lo *= 0.5;
    if (++guard > 200 || lo < 1e-300) throw NoBracket("saddle bracket expansion failed (low)");
  }
  guard = 0;
  while (g(hi) > target) {
    hi *= 2.0;
    if (++guard > 200 || hi > 1e300) throw NoBracket("saddle bracket expansion failed (high)");
  }

  double mid = 0.5 * (lo + hi), val = 0;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    val = g(mid);
    if (std::abs(val - target) <= 0.5 * tol) break;
    if (val > target)
      lo = mid;
    else
      hi = mid;
  }
  double remainder = table.taylor_remainder(mid);
  if (std::abs(val - target) + remainder > tol)
    throw NoBracket("saddle bisection failed to meet the residual bound");

  SaddlePoint s;
  s.x = x;
  s.y = double(y);
  s.c = mid;
  s.residual = val - target;
  return s;
}

// ---------------------------------------------------------------------------
// Dickman rho

RhoTable build_rho_table(int step_exp, double u_max) {
  RhoTable t;
  t.step = std::ldexp(1.0, -step_exp);
  t.u_max = u_max;
  const u64 window = u64(1) << step_exp;  // grid points per unit interval
  const u64 n = u64(std::llround(u_max / t.step));
  t.values.assign(n + 1, 1.0);  // rho = 1 on [0, 1]

  // prefix sums of table values split by index parity, long double carry
  std::vector<long double> pe(n + 2, 0.0L), po(n + 2, 0.0L);
  auto push_prefix = [&](u64 k) {
    double v = t.values[k];
    pe[k + 1] = pe[k] + (k % 2 == 0 ? v : 0.0);
    po[k + 1] = po[k] + (k % 2 == 1 ? v : 0.0);
  };
  for (u64 k = 0; k <= window; ++k) push_prefix(k);

  const double h = t.step;
  for (u64 k = window + 1; k <= n; ++k) {
    // composite Simpson over [u-1, u]: weights 1,4,2,...,4,1; the unknown
    // rho(u) sits at the last node, solved for directly.
    u64 a = k - window;
    long double sum_opp = 0, sum_same = 0;  // interior: weight 4 when i-k odd
    if (t.values[a] > 1e-8) {
      sum_same = (k % 2 == 0) ? (pe[k] - pe[a + 1]) : (po[k] - po[a + 1]);
      sum_opp = ((pe[k] - pe[a + 1]) + (po[k] - po[a + 1])) - sum_same;
    } else {
      // deep in the decay the prefix differences lose all precision against
      // values of order rho(u); fall back to direct window summation
      for (u64 i = a + 1; i < k; ++i)
        ((i + k) % 2 == 1 ? sum_opp : sum_same) += t.values[i];
    }
    long double partial = t.values[a] + 4.0L * sum_opp + 2.0L * sum_same;
    double u = double(k) * h;
    t.values[k] = double((h / 3.0L) * partial / (u - h / 3.0));
    push_prefix(k);
  }
  return t;
}

double RhoTable::operator()(double u) const {
  if (std::isnan(u) || u < 0 || u > u_max) throw RangeExceeded("rho argument outside [0, u_max]");
  if (u <= 1.0) return 1.0;
  double idx = u / step;
  u64 k = u64(idx);
  if (k >= values.size() - 1) return values.back();
  double frac = idx - double(k);
  return values[k] * (1.0 - frac) + values[k + 1] * frac;
}

double dickman_rho(double u) {
  static const RhoTable table = build_rho_table(10, 50.0);
  return table(u);
}

double psi_estimate(double x, double y) {
  if (!(x >= y) || !(y >= 2)) throw InvalidInput("psi_estimate: need x >= y >= 2");
  double u = std::log(x) / std::log(y);
  return x * dickman_rho(u);
}

// ---------------------------------------------------------------------------
// distinct-prime construction count

HeuristicCount heuristic_count(u128 H, double kappa) {
  if (H < 16) throw InvalidInput("heuristic_count: H must be >= 16");
  if (!(kappa > 1.0)) throw InvalidInput("heuristic_count: kappa must exceed 1");
  const double log_h = log_u128(H);
  const double loglog_h = std::log(log_h);

  HeuristicCount out;
  out.K = u64(std::floor(log_h / (kappa * loglog_h)));
  double yd = std::pow(log_h, kappa);
  if (yd > 1e9) throw TooLarge("heuristic_count: (log H)^kappa exceeds the sieve cap");
  out.y = u64(yd);
  out.pi_y = prime_count_upto(out.y);
  if (out.pi_y < 3 * out.K)
    throw InsufficientPrimes("pi(y) < 3K: not enough primes for disjoint supports");

  auto log_binom = [](u64 n, u64 k) {
    return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
           std::lgamma(double(n - k) + 1.0);
  };
  out.log_count = log_binom(out.pi_y, out.K) + log_binom(out.pi_y - out.K, out.K) +
                  log_binom(out.pi_y - 2 * out.K, out.K);
  out.comparison_exponent = 3.0 * (1.0 - 1.0 / kappa) * log_h;
  return out;
}

}  // namespace xyzlab
