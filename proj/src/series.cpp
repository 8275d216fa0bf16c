#include "xyzlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "xyzlab/quadrature.hpp"
#include "xyzlab/smooth.hpp"

namespace xyzlab {

namespace {

// shared ascending prime list, grown on demand
std::shared_ptr<const std::vector<u64>> prime_cache(u64 bound) {
  static std::mutex m;
  static u64 cached_bound = 0;
  static std::shared_ptr<const std::vector<u64>> cached;
  std::lock_guard<std::mutex> lk(m);
  if (!cached || cached_bound < bound) {
    cached = std::make_shared<const std::vector<u64>>(primes_upto(bound).primes);
    cached_bound = bound;
  }
  return cached;
}

}  // namespace

double zeta_real(double s) {
  if (!(s > 1.0)) throw ZetaPole("zeta_real requires s > 1");
  constexpr int N = 10'000;
  double acc = 0;
  for (int n = N; n >= 1; --n) acc += std::pow(double(n), -s);
  const double Ns = std::pow(double(N), -s);
  acc += Ns * double(N) / (s - 1.0);  // N^(1-s)/(s-1)
  acc -= 0.5 * Ns;
  acc += s * Ns / double(N) / 12.0;                                              // B2 term
  acc -= s * (s + 1.0) * (s + 2.0) * Ns / (double(N) * double(N) * double(N)) / 720.0;  // B4 term
  return acc;
}

// ---------------------------------------------------------------------------
// archimedean singular integral

SeriesValue sing_int(double c) {
  if (!(c > 1.0 / 3.0)) throw DivergentParameter("singular integral diverges at c <= 1/3");
  // Along rays (t1, t2) = r (w, 1-w) the triangle integral factors:
  //   integral = [int_0^1 r^{3c-2} dr] * [int_0^1 (w(1-w))^{c-1} dw]
  //            = B(c, c) / (3c - 1).
  // The radial part is exact; the w-integral keeps the corner behavior. For
  // c < 1 the substitution w = s^(1/c) cancels w^{c-1} exactly on the half
  // interval (and symmetrically on the other half).
  QuadResult B;
  if (c >= 1.0) {
    auto f = [c](double w) { return std::pow(w * (1.0 - w), c - 1.0); };
    B = adaptive_gauss(f, 0.0, 0.5, 1e-11, 1e-13);
  } else {
    auto f = [c](double s) {
      double w = std::pow(s, 1.0 / c);
      return std::pow(1.0 - w, c - 1.0);
    };
    B = adaptive_gauss(f, 0.0, std::pow(0.5, c), 1e-11, 1e-13);
    B.value /= c;
    B.error_bound /= c;
  }
  B.value *= 2.0;
  B.error_bound *= 2.0;

  SeriesValue out;
  out.c = c;
  out.value = c * c * c / (3.0 * c - 1.0) * B.value;
  out.truncation_bound = c * c * c / (3.0 * c - 1.0) * B.error_bound + 1e-14 * std::abs(out.value);
  return out;
}

SeriesValue sing_int_weighted(double c, const WeightFunction& phi) {
  SeriesValue out;
  out.c = c;
  if (phi.epsilon <= 0) return out;  // empty support
  const double a = phi.epsilon / 2.0, b = 1.0 - phi.epsilon / 2.0;

  auto tensor = [&](int n) {
    const GaussRule& g = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::vector<double> t(size_t(n)), w(size_t(n)), pv(size_t(n));
    for (int i = 0; i < n; ++i) {
      t[size_t(i)] = mid + half * g.nodes[size_t(i)];
      w[size_t(i)] = g.weights[size_t(i)] * half;
      pv[size_t(i)] = phi(t[size_t(i)]);
    }
    double acc = 0;
    for (int i = 0; i < n; ++i) {
      if (pv[size_t(i)] == 0) continue;
      double t1 = t[size_t(i)];
      double row = 0;
      for (int j = 0; j < n; ++j) {
        if (pv[size_t(j)] == 0) continue;
        double t2 = t[size_t(j)];
        double p3 = phi(t1 + t2);
        if (p3 == 0) continue;
        row += w[size_t(j)] * pv[size_t(j)] * p3 *
               std::pow(t1 * t2 * (t1 + t2), c - 1.0);
      }
      acc += w[size_t(i)] * pv[size_t(i)] * row;
    }
    return acc;
  };
  double fine = tensor(256);
  double coarse = tensor(128);
  out.value = c * c * c * fine;
  out.truncation_bound = c * c * c * std::abs(fine - coarse) + 1e-14 * std::abs(out.value);
  return out;
}

// ---------------------------------------------------------------------------
// Euler factors

double sing_f_factor(u64 p, double c) {
  const double pd = double(p);
  const double pc = std::pow(pd, c);
  const double r = (pd - pc) / (pd - 1.0);
  return 1.0 + (pd - 1.0) / (pd * std::expm1((3.0 * c - 1.0) * std::log(pd))) * r * r * r;
}

double sing_fstar_factor(u64 p, double c) {
  const double pd = double(p);
  const double pc = std::pow(pd, c);
  const double r = (pd - pc) / (pd - 1.0);
  return 1.0 + std::pow(pd, 1.0 - 3.0 * c) * ((pd - 1.0) / pd * r * r * r - 1.0);
}

namespace {

double log_factor(u64 p, double c, bool primitive) {
  // factor - 1, then log1p, to keep precision for factors near 1
  const double pd = double(p);
  const double pc = std::pow(pd, c);
  const double r = (pd - pc) / (pd - 1.0);
  double a;
  if (primitive)
    a = std::pow(pd, 1.0 - 3.0 * c) * ((pd - 1.0) / pd * r * r * r - 1.0);
  else
    a = (pd - 1.0) / (pd * std::expm1((3.0 * c - 1.0) * std::log(pd))) * r * r * r;
  return std::log1p(a);
}

// complementary factor for p > y in the finite-y series
double log_tail_factor(u64 p) {
  const double d = double(p) - 1.0;
  return std::log1p(-1.0 / (d * d));
}

SeriesValue finite_series(double c, u64 y, u64 cutoff, bool primitive) {
  if (!(c > 1.0 / 3.0)) throw DivergentParameter("series diverges at c <= 1/3");
  if (y < 2) throw InvalidInput("series: y must be >= 2");
  u64 P = std::max(cutoff, y);
  auto primes = prime_cache(P);
  double acc = 0;
  for (u64 p : *primes) {
    if (p > P) break;
    acc += (p <= y) ? log_factor(p, c, primitive) : log_tail_factor(p);
  }
  SeriesValue out;
  out.value = std::exp(acc);
  out.c = c;
  out.y = y;
  out.cutoff = P;
  // dropped tail: sum over p > P of -log(1 - 1/(p-1)^2) < 2/(P-1)
  out.truncation_bound = 2.0 / (double(P) - 1.0);
  return out;
}

// --- short Dirichlet expansions of log(factor) for the limit products ------
//
// Every factor is built from w = p^{1-3c}, u = p^{c-1}, q = p^{-1}. Each
// series below is a finite sum  sum_i coef_i p^{-expo_i}  valid for p > P,
// plus a residual envelope |r(p)| <= env_coef * (P/p)^env_expo. Exponents
// above kEmax are dropped into the envelope, which makes every bound
// rigorous and composable.

constexpr double kEmax = 3.0;

struct ExpSeries {
  std::vector<std::pair<double, double>> terms;  // (expo, coef) ascending
  double env_coef = 0;
  double env_expo = kEmax + 1.0;
  double P = 1e7;

  void drop(double expo, double coef) {
    if (coef == 0) return;
    // |coef| p^-expo = |coef| P^-expo (P/p)^expo for p >= P
    absorb_env(std::abs(coef) * std::pow(P, -expo), expo);
  }
  void absorb_env(double d, double e) {
    if (d == 0) return;
    if (env_coef == 0) {
      env_coef = d;
      env_expo = e;
      return;
    }
    env_expo = std::min(env_expo, e);
    env_coef += d;
  }
  void add(double expo, double coef) {
    if (coef == 0) return;
    if (expo > kEmax) {
      drop(expo, coef);
      return;
    }
    auto it = std::lower_bound(terms.begin(), terms.end(), expo - 1e-12,
                               [](const auto& t, double v) { return t.first < v; });
    if (it != terms.end() && std::abs(it->first - expo) <= 1e-12) {
      it->second += coef;
    } else {
      terms.insert(it, {expo, coef});
    }
  }
  double min_expo() const { return terms.empty() ? kEmax + 1.0 : terms.front().first; }
  // |series(p)| <= value_env * (P/p)^min_expo for p >= P
  double value_env() const {
    double v = 0;
    for (auto& [e, c] : terms) v += std::abs(c) * std::pow(P, -e);
    return v;
  }
};

ExpSeries mul(const ExpSeries& A, const ExpSeries& B) {
  ExpSeries out;
  out.P = A.P;
  for (auto& [ea, ca] : A.terms)
    for (auto& [eb, cb] : B.terms) out.add(ea + eb, ca * cb);
  // residual envelopes: A rB + B rA + rA rB
  double VA = A.value_env(), VB = B.value_env();
  if (B.env_coef > 0) out.absorb_env(VA * B.env_coef, A.min_expo() + B.env_expo);
  if (A.env_coef > 0) out.absorb_env(VB * A.env_coef, B.min_expo() + A.env_expo);
  if (A.env_coef > 0 && B.env_coef > 0)
    out.absorb_env(A.env_coef * B.env_coef, A.env_expo + B.env_expo);
  return out;
}

// log(1 + a) for a small series: a - a^2/2 + ... until the power's envelope
// is negligible; the series remainder goes into the envelope.
ExpSeries log1p_series(const ExpSeries& a) {
  ExpSeries out;
  out.P = a.P;
  out.absorb_env(2.0 * a.env_coef, a.env_expo);  // |log(1+a+r)-log(1+a)| <= 2|r|
  ExpSeries power = a;
  double V = a.value_env() + a.env_coef;
  double sign = 1.0;
  for (int j = 1; j <= 12; ++j) {
    for (auto& [e, c] : power.terms) out.add(e, sign * c / double(j));
    out.absorb_env(power.env_coef / double(j), power.env_expo);
    double Vj = std::pow(V, j + 1) / double(j + 1);
    if (power.terms.empty() || Vj < 1e-25 || j == 12) {
      // remaining sum_{k>j} |a|^k/k <= V^{j+1}/((j+1)(1-V))
      out.absorb_env(Vj / std::max(0.5, 1.0 - V), double(j + 1) * a.min_expo());
      break;
    }
    power = mul(power, a);
    sign = -sign;
  }
  return out;
}

// expansion of log(sing factor) at parameter c; primitive selects the series
ExpSeries expand_log_factor(double c, bool primitive, double P) {
  auto make = [&](std::initializer_list<std::pair<double, double>> t) {
    ExpSeries s;
    s.P = P;
    for (auto& [e, co] : t) s.add(e, co);
    return s;
  };
  const double s3 = 3.0 * c - 1.0;  // exponent of w
  const double t1 = 1.0 - c;        // exponent of u

  ExpSeries cube = make({{0.0, 1.0}, {t1, -3.0}, {2.0 * t1, 3.0}, {3.0 * t1, -1.0}});
  // (1 - q)^-2 = sum (k+1) q^k
  ExpSeries inv_q2;
  inv_q2.P = P;
  {
    int k = 0;
    for (; double(k) <= kEmax; ++k) inv_q2.add(double(k), double(k + 1));
    // remainder sum_{j>=k} (j+1) p^-j <= (k+2) p^-k for p >= 2
    inv_q2.absorb_env(double(k + 2) * std::pow(P, -double(k)), double(k));
  }
  ExpSeries a;
  if (primitive) {
    // b = w * ((1-u)^3 (1-q)^-2 - 1)
    ExpSeries inner = mul(cube, inv_q2);
    inner.add(0.0, -1.0);
    a = mul(make({{s3, 1.0}}), inner);
  } else {
    // a = w (1-u)^3 (1-q)^-2 (1-w)^-1
    ExpSeries inv_w;
    inv_w.P = P;
    int m = 0;
    for (; double(m) * s3 <= kEmax; ++m) inv_w.add(double(m) * s3, 1.0);
    inv_w.absorb_env(2.0 * std::pow(P, -double(m) * s3), double(m) * s3);
    a = mul(mul(mul(make({{s3, 1.0}}), cube), inv_q2), inv_w);
  }
  return log1p_series(a);
}

SeriesValue limit_series(double c, u64 cutoff, bool primitive) {
  if (primitive) {
    if (!(c > 0.5)) throw DivergentParameter("primitive product diverges at c <= 1/2");
  } else {
    if (!(c > 2.0 / 3.0)) throw DivergentParameter("product diverges at c <= 2/3");
  }
  const u64 P = cutoff;
  ExpSeries expansion = expand_log_factor(c, primitive, double(P));

  // peel matching powers of zeta: process exponents ascending; each emitted
  // zeta(e)^coef cancels coef * p^-e and feeds -coef/j at je for j >= 2
  std::vector<std::pair<double, double>> emitted;
  for (size_t i = 0; i < expansion.terms.size(); ++i) {
    auto [e, coef] = expansion.terms[i];
    if (coef == 0) continue;
    if (!(e > 1.0)) throw Error("limit_series: non-convergent exponent in expansion");
    emitted.push_back({e, coef});
    for (int j = 2; double(j) * e <= kEmax + 1e-9; ++j) expansion.add(double(j) * e, -coef / j);
    // beyond kEmax: -log(1-x) tail, |sum_{j>jmax} x^j / j| with x = p^-e
    int jmax = int(kEmax / e);
    double xP = std::pow(double(P), -e);
    expansion.absorb_env(std::abs(coef) * std::pow(xP, jmax + 1), double(jmax + 1) * e);
  }

  double log_value = 0;
  for (auto& [e, coef] : emitted) log_value += coef * std::log(zeta_real(e));

  auto primes = prime_cache(P);
  double comp_acc = 0;
  for (u64 p : *primes) {
    if (p > P) break;
    double lf = log_factor(p, c, primitive);
    double lnp = std::log(double(p));
    for (auto& [e, coef] : emitted) lf += coef * std::log1p(-std::exp(-e * lnp));
    comp_acc += lf;
  }
  log_value += comp_acc;

  // tail over p > P of the compensated factor logs, via the envelope
  double tail = expansion.env_coef * double(P) / std::max(1e-9, expansion.env_expo - 1.0);
  // leftover explicit terms (should be none after peeling)
  for (auto& [e, coef] : expansion.terms)
    if (std::abs(coef) > 1e-15) tail += std::abs(coef) * std::pow(double(P), 1.0 - e) / (e - 1.0);

  SeriesValue out;
  out.value = std::exp(log_value);
  out.c = c;
  out.cutoff = P;
  out.truncation_bound = tail + 1e-12;
  return out;
}

}  // namespace

SeriesValue sing_f(double c, u64 y, u64 cutoff) { return finite_series(c, y, cutoff, false); }
SeriesValue sing_fstar(double c, u64 y, u64 cutoff) { return finite_series(c, y, cutoff, true); }
SeriesValue sing_f_limit(double c, u64 cutoff) { return limit_series(c, cutoff, false); }
SeriesValue sing_fstar_limit(double c, u64 cutoff) { return limit_series(c, cutoff, true); }

IdentityCheck verify_euler_identity(double c) {
  if (!(c > 2.0 / 3.0)) throw DivergentParameter("identity needs c > 2/3");
  IdentityCheck out;
  out.lhs = sing_fstar_limit(c).value;
  out.rhs = sing_f_limit(c).value / zeta_real(3.0 * c - 1.0);
  out.abs_diff = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace xyzlab
