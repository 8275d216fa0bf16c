#include "xyzlab/circle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "xyzlab/arith.hpp"
#include "xyzlab/parallel.hpp"
#include "xyzlab/quadrature.hpp"
#include "xyzlab/search.hpp"

namespace xyzlab {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

cplx unit_phase(double t) {  // e(t) = exp(2 pi i t)
  double arg = kTwoPi * t;
  return {std::cos(arg), std::sin(arg)};
}

// members of S(y) up to x paired with their weights; terms with zero weight
// are dropped once here instead of inside every evaluation
struct WeightedMembers {
  std::vector<u64> n;
  std::vector<double> w;
};

WeightedMembers weighted_members(u64 x, u64 y, const WeightFunction& phi, const Limits& limits) {
  SmoothSet s = enumerate_smooth(x, y, limits);
  WeightedMembers out;
  for (u64 v : s.members) {
    double wv = phi(double(v) / double(x));
    if (wv != 0) {
      out.n.push_back(v);
      out.w.push_back(wv);
    }
  }
  return out;
}

cplx exp_sum_over(const WeightedMembers& m, double alpha) {
  cplx acc{0, 0};
  for (size_t i = 0; i < m.n.size(); ++i)
    acc += m.w[i] * unit_phase(double(m.n[i]) * alpha);
  return acc;
}

}  // namespace

cplx exp_sum(u64 x, u64 y, double alpha, const WeightFunction& phi, const Limits& limits) {
  return exp_sum_over(weighted_members(x, y, phi, limits), alpha);
}

CircleIdentity circle_identity(u64 x, u64 y, const WeightFunction& phi, int threads) {
  WeightedMembers m = weighted_members(x, y, phi, {});
  const u64 N = 4 * x;  // exact for frequencies in (-x, 2x)
  std::vector<cplx> vals(N);
  parallel_chunks(N, 64, resolve_threads(threads), [&](u64 lo, u64 hi) {
    for (u64 j = lo; j < hi; ++j) {
      cplx e = exp_sum_over(m, double(j) / double(N));
      vals[j] = e * e * std::conj(e);
    }
  });
  cplx quad{0, 0};
  for (u64 j = 0; j < N; ++j) quad += vals[j];  // index order, thread-independent
  quad /= double(N);

  CircleIdentity out;
  out.quadrature = quad;
  out.direct = weighted_count(x, y, phi, false);
  out.abs_diff = std::abs(quad - cplx{out.direct, 0});
  return out;
}

namespace {

// mu(q/g)/phi(q/g) for every divisor g of q, keyed by g
std::map<u64, double> divisor_coefficients(u64 q) {
  Factorization fq = factorize(u128(q), 1'000'000);
  std::vector<u64> divisors{1};
  for (const PrimePower& pp : fq.factors) {
    size_t old = divisors.size();
    u64 pe = 1;
    for (u32 e = 1; e <= pp.exponent; ++e) {
      pe *= u64(pp.prime);
      for (size_t i = 0; i < old; ++i) divisors.push_back(divisors[i] * pe);
    }
  }
  std::map<u64, double> coef;
  for (u64 g : divisors) {
    Factorization fc = factorize(u128(q / g), 1'000'000);
    int mu = mobius(fc);
    coef[g] = mu == 0 ? 0.0 : double(mu) / double(u64(euler_phi(fc)));
  }
  return coef;
}

}  // namespace

cplx local_main_term(u64 x, u64 y, u64 q, double gamma, const WeightFunction& phi) {
  if (q < 1) throw InvalidInput("local_main_term: q must be >= 1");
  WeightedMembers m = weighted_members(x, y, phi, {});
  auto coef = divisor_coefficients(q);
  cplx acc{0, 0};
  for (size_t i = 0; i < m.n.size(); ++i) {
    double cg = coef.at(std::gcd(q, m.n[i]));
    if (cg == 0) continue;
    acc += cg * m.w[i] * unit_phase(double(m.n[i]) * gamma);
  }
  return acc;
}

QSplitCheck verify_q_factorization(u64 x, u64 y, u64 q, double gamma, const WeightFunction& phi) {
  Factorization fq = factorize(u128(q), 1'000'000);
  QSplitCheck out;
  out.q0 = 1;
  out.q1 = 1;
  Factorization f1;
  f1.value = 1;
  for (const PrimePower& pp : fq.factors) {
    u64 pe = 1;
    for (u32 e = 0; e < pp.exponent; ++e) pe *= u64(pp.prime);
    if (pp.prime <= y)
      out.q0 *= pe;
    else {
      out.q1 *= pe;
      f1.factors.push_back(pp);
      f1.value = checked_mul(f1.value, u128(pe));
    }
  }
  int mu = mobius(f1);
  out.factor = mu == 0 ? 0.0 : double(mu) / double(u64(euler_phi(f1)));
  out.m_q = local_main_term(x, y, q, gamma, phi);
  out.m_q0 = local_main_term(x, y, out.q0, gamma, phi);
  out.residual = std::abs(out.m_q - out.factor * out.m_q0);
  return out;
}

cplx partial_zeta(cplx s, u64 y) {
  if (!(s.real() > 0)) throw InvalidInput("partial_zeta needs Re(s) > 0");
  if (y < 2) throw InvalidInput("partial_zeta: y must be >= 2");
  auto table = primes_upto(y);
  cplx prod{1, 0};
  for (u64 p : table.primes) {
    cplx ps = std::exp(-s * std::log(double(p)));
    cplx factor = cplx{1, 0} - ps;
    if (std::abs(factor) < 1e-300) throw PoleFactor("partial_zeta factor vanished");
    prod /= factor;
  }
  return prod;
}

cplx mellin_phi(const WeightFunction& phi, cplx s, double lambda) {
  if (!(phi.epsilon > 0)) return {0, 0};
  const double a = phi.epsilon / 2.0, b = 1.0 - phi.epsilon / 2.0;
  // panel count tracks the oscillation so each panel spans a few periods;
  // 8 panels x GL-64 keeps the minimum at 512 nodes
  int panels = std::max(8, int(std::ceil(std::abs(lambda) * (b - a) / 4.0)));
  const GaussRule& g = gauss_legendre(64);
  cplx acc{0, 0};
  for (int k = 0; k < panels; ++k) {
    double lo = a + (b - a) * double(k) / panels;
    double hi = a + (b - a) * double(k + 1) / panels;
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (size_t i = 0; i < g.nodes.size(); ++i) {
      double w = mid + half * g.nodes[i];
      double pw = phi(w);
      if (pw == 0) continue;
      // phi(w) e(lambda w) w^(s-1)
      cplx val = pw * unit_phase(lambda * w) * std::exp((s - cplx{1, 0}) * std::log(w));
      acc += g.weights[i] * half * val;
    }
  }
  return acc;
}

cplx saddle_main_term(u64 x, u64 y, u64 q0, double gamma, const WeightFunction& phi) {
  Factorization f0 = factorize(u128(q0), 1'000'000);
  if (f0.largest_prime() > u128(y)) throw InvalidInput("saddle_main_term: q0 must be y-smooth");
  SaddlePoint sp = saddle_point(double(x), y);
  double local = std::pow(double(q0), -sp.c);
  for (const PrimePower& pp : f0.factors) {
    double p = double(u64(pp.prime));
    local *= 1.0 - (std::pow(p, sp.c) - 1.0) / (p - 1.0);
  }
  cplx transform = mellin_phi(phi, cplx{sp.c, 0}, gamma * double(x));
  double psi = double(psi_exact(u128(x), y));
  return local * sp.c * transform * psi;
}

// ---------------------------------------------------------------------------
// Farey machinery, exact rational arithmetic

namespace {

Rational reduce(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd_u128(num < 0 ? u128(-num) : u128(num), u128(den));
  if (g == 0) g = 1;
  i128 n = num / i128(g), d = den / i128(g);
  constexpr i128 lim = i128(1) << 62;
  if (n > lim || n < -lim || d > lim) throw Overflow("rational overflow");
  return Rational{i64(n), i64(d)};
}

}  // namespace

Rational rat_add(Rational a, Rational b) {
  return reduce(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
}
Rational rat_sub(Rational a, Rational b) {
  return reduce(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
}
int rat_cmp(Rational a, Rational b) {
  i128 lhs = i128(a.num) * b.den, rhs = i128(b.num) * a.den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

FareyDissection farey_dissection(u64 Q) {
  if (Q < 1) throw InvalidInput("farey_dissection: order must be >= 1");
  if (Q > 5000) throw TooLarge("farey order capped at 5000");
  // ascending Farey sequence via the mediant next-term recurrence
  std::vector<Rational> fracs;
  i64 a = 0, b = 1, c = 1, d = i64(Q);
  fracs.push_back({0, 1});
  while (c <= i64(Q)) {
    fracs.push_back({c, d});
    i64 k = (i64(Q) + b) / d;
    i64 a2 = c, b2 = d;
    c = k * c - a;
    d = k * d - b;
    a = a2;
    b = b2;
  }
  auto mediant = [](Rational l, Rational r) {
    return reduce(i128(l.num) + r.num, i128(l.den) + r.den);
  };
  FareyDissection out;
  out.order = Q;
  out.intervals.reserve(fracs.size());
  for (size_t i = 0; i < fracs.size(); ++i) {
    Rational lo = (i == 0) ? Rational{0, 1} : mediant(fracs[i - 1], fracs[i]);
    Rational hi = (i + 1 == fracs.size()) ? Rational{1, 1} : mediant(fracs[i], fracs[i + 1]);
    out.intervals.push_back({fracs[i], lo, hi});
  }
  return out;
}

MajorArcs major_arcs(u64 x, double delta) {
  if (!(delta > 0) || !(delta <= 0.25)) throw BadDelta("major arcs need 0 < delta <= 1/4");
  if (x < 1) throw InvalidInput("major_arcs: x must be >= 1");
  u64 Q = u64(std::sqrt(double(x)));
  while ((Q + 1) * (Q + 1) <= x) ++Q;
  while (Q > 1 && Q * Q > x) --Q;
  FareyDissection diss = farey_dissection(std::max<u64>(Q, 1));

  u64 q_cut = u64(std::pow(double(x), 0.25));
  while (std::pow(double(q_cut + 1), 4.0) <= double(x)) ++q_cut;
  const double width = std::pow(double(x), delta - 1.0);

  MajorArcs out;
  out.farey_order = diss.order;
  for (const FareyInterval& iv : diss.intervals) {
    if (u64(iv.frac.den) > q_cut) continue;
    double center = iv.frac.to_double();
    double lo = std::max(iv.lo.to_double(), center - width);
    double hi = std::min(iv.hi.to_double(), center + width);
    if (hi <= lo) continue;
    out.arcs.push_back({iv.frac, lo, hi});
    out.total_measure += hi - lo;
  }
  return out;
}

}  // namespace xyzlab
