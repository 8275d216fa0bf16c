#pragma once

#include <complex>
#include <vector>

#include "xyzlab/int128.hpp"
#include "xyzlab/smooth.hpp"
#include "xyzlab/weight.hpp"

namespace xyzlab {

using cplx = std::complex<double>;

/// Weighted exponential sum E(x, y; alpha) = sum over smooth n of
/// e(n alpha) phi(n/x), with e(t) = exp(2 pi i t).
cplx exp_sum(u64 x, u64 y, double alpha, const WeightFunction& phi, const Limits& limits = {});

/// The counting identity: integral over [0,1] of E(a)^2 E(-a) equals the
/// ordered weighted solution count. The quadrature side uses a uniform grid of
/// N = 4x points, which is exact for this trigonometric polynomial (all
/// frequencies lie in (-x, 2x), so only the zero mode survives aliasing).
struct CircleIdentity {
  cplx quadrature;
  double direct = 0;
  double abs_diff = 0;
};
CircleIdentity circle_identity(u64 x, u64 y, const WeightFunction& phi, int threads = 0);

/// Local main term M(x, y; q, gamma) = sum over smooth n of
/// mu(q/(q,n)) / phi_euler(q/(q,n)) * e(n gamma) * phi(n/x), exact arithmetic
/// for mu and phi_euler from the factorization of q.
cplx local_main_term(u64 x, u64 y, u64 q, double gamma, const WeightFunction& phi);

/// Checks M(x,y;q,gamma) = mu(q1)/phi(q1) * M(x,y;q0,gamma) where q = q0 q1
/// splits into the y-smooth part q0 and the rough part q1.
struct QSplitCheck {
  u64 q0 = 0, q1 = 0;
  double factor = 0;  // mu(q1)/phi(q1)
  cplx m_q, m_q0;
  double residual = 0;  // |M(q) - factor * M(q0)|
};
QSplitCheck verify_q_factorization(u64 x, u64 y, u64 q, double gamma, const WeightFunction& phi);

/// Partial Euler product zeta(s; y) = prod over p <= y of (1 - p^-s)^-1 for
/// Re(s) > 0; PoleFactor if a factor vanishes.
cplx partial_zeta(cplx s, u64 y);

/// Transform phi_check(s, lambda) = integral of phi(w) e(lambda w) w^(s-1) dw.
/// Panelized Gauss quadrature sized to the oscillation (>= 512 nodes).
cplx mellin_phi(const WeightFunction& phi, cplx s, double lambda);

/// Leading saddle-point form of the local main term:
///   q0^-c * prod over p | q0 of (1 - (p^c - 1)/(p - 1)) * c
///   * phi_check(c, gamma x) * Psi(x, y),
/// with c the smooth-count saddle point. Report-only companion to
/// local_main_term. q0 must be y-smooth.
cplx saddle_main_term(u64 x, u64 y, u64 q0, double gamma, const WeightFunction& phi);

/// Exact fraction with i64 parts; enough room for mediants of modest orders.
struct Rational {
  i64 num = 0;
  i64 den = 1;
  double to_double() const { return double(num) / double(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};
Rational rat_add(Rational a, Rational b);
Rational rat_sub(Rational a, Rational b);
int rat_cmp(Rational a, Rational b);

/// Mediant-bounded Farey intervals of order Q partitioning [0, 1].
struct FareyInterval {
  Rational frac;
  Rational lo, hi;
};
struct FareyDissection {
  u64 order = 0;
  std::vector<FareyInterval> intervals;
};
FareyDissection farey_dissection(u64 Q);

/// Major arcs |alpha - a/q| <= x^(delta-1) for q <= x^(1/4), clipped to the
/// Farey intervals of order floor(sqrt x). BadDelta unless 0 < delta <= 1/4.
struct MajorArc {
  Rational frac;
  double lo = 0, hi = 0;
};
struct MajorArcs {
  u64 farey_order = 0;
  double total_measure = 0;
  std::vector<MajorArc> arcs;
};
MajorArcs major_arcs(u64 x, double delta);

}  // namespace xyzlab
