#pragma once

#include <optional>

#include "xyzlab/int128.hpp"
#include "xyzlab/weight.hpp"

namespace xyzlab {

/// A numerically evaluated series/integral with a rigorous bound on what the
/// evaluation neglected. For Euler products the bound is on
/// |log(reported) - log(true)|; for quadratures it is the accumulated
/// error estimate.
struct SeriesValue {
  double value = 0;
  double truncation_bound = 0;
  double c = 0;
  std::optional<u64> y;  // empty = limit (y -> infinity)
  u64 cutoff = 0;        // prime cutoff used for products, 0 for integrals
};

/// Riemann zeta for real s > 1: 1e4 direct terms plus Euler-Maclaurin
/// corrections through the B4 term. ZetaPole at s <= 1.
double zeta_real(double s);

/// c^3 * integral over {t1, t2 > 0, t1 + t2 <= 1} of (t1 t2 (t1+t2))^(c-1).
/// The triangle is factored along rays t = r*(w, 1-w) (radial part integrates
/// in closed form) and the remaining edge singularity is removed exactly by
/// the substitution w = s^(1/c) before adaptive quadrature.
/// DivergentParameter at c <= 1/3.
SeriesValue sing_int(double c);

/// c^3 * double integral of phi(t1) phi(t2) phi(t1+t2) (t1 t2 (t1+t2))^(c-1),
/// tensor Gauss quadrature (256^2 nodes) on the support box. Entire in c.
SeriesValue sing_int_weighted(double c, const WeightFunction& phi);

/// Euler factor at p of the all-solutions series:
///   1 + (p-1)/(p (p^(3c-1)-1)) * ((p - p^c)/(p-1))^3.
double sing_f_factor(u64 p, double c);

/// Euler factor at p of the primitive series. Algebraically this equals
/// sing_f_factor(p, c) * (1 - p^(1-3c)); it is evaluated through its own
/// expression so the two routes stay independent:
///   1 + p^(1-3c) * ( (p-1)/p * ((p - p^c)/(p-1))^3 - 1 ).
double sing_fstar_factor(u64 p, double c);

/// Product of sing_f_factor over p <= y times the complementary product of
/// (1 - 1/(p-1)^2) over y < p <= cutoff; the neglected tail is bounded by
/// 2/(cutoff-1). DivergentParameter at c <= 1/3.
SeriesValue sing_f(double c, u64 y, u64 cutoff = 10'000'000);
SeriesValue sing_fstar(double c, u64 y, u64 cutoff = 10'000'000);

/// Full Euler products. Factor logs are expanded into a short Dirichlet
/// polynomial; the matching powers of zeta are split off and evaluated by
/// zeta_real, leaving a compensated product whose tail beyond the cutoff is
/// rigorously below ~1e-12 (carried in truncation_bound). Abscissae: c > 2/3
/// for sing_f_limit, c > 1/2 for sing_fstar_limit.
SeriesValue sing_f_limit(double c, u64 cutoff = 10'000'000);
SeriesValue sing_fstar_limit(double c, u64 cutoff = 10'000'000);

struct IdentityCheck {
  double lhs = 0;  // primitive product
  double rhs = 0;  // all-solutions product / zeta(3c-1)
  double abs_diff = 0;
};

/// Both sides of  S_fstar(c) = S_f(c) / zeta(3c-1), independently evaluated.
IdentityCheck verify_euler_identity(double c);

}  // namespace xyzlab
