#pragma once

#include <vector>

#include "xyzlab/int128.hpp"

namespace xyzlab {

/// Sum of log p / (p^c - 1) over primes p <= y, ascending order. Strictly
/// decreasing in c. Exact streaming summation; y capped at 2^40.
double saddle_sum(double c, u64 y);

/// Unique positive root c of saddle_sum(c, y) = log x.
struct SaddlePoint {
  double x = 0;
  double y = 0;
  double c = 0;
  double residual = 0;  // saddle_sum(c, y) - log x; |residual| <= 1e-9 log x
};

/// Bracket expansion then bisection (<= 200 halvings). For y above 1e7 the
/// prime sum is evaluated through a compressed moment table built by one
/// streaming sieve pass; its Taylor remainder is folded into the residual
/// budget. Requires x >= 2 and 2 <= y < 2^40.
SaddlePoint saddle_point(double x, u64 y, double bracket_lo = 0.5, double bracket_hi = 2.0);

/// Dickman rho sampled on a fixed grid, advanced through the delay relation
/// rho(u) = (1/u) * integral of rho over [u-1, u] (composite Simpson on the
/// accumulated history), linear interpolation between grid points.
struct RhoTable {
  double step = 0;
  double u_max = 0;
  std::vector<double> values;
  double operator()(double u) const;
};

/// Builds a table with the given step exponent (step = 2^-step_exp) on
/// [0, u_max]. The shared default table uses step 2^-10 on [0, 50].
RhoTable build_rho_table(int step_exp, double u_max);

/// rho(u) from the shared table; RangeExceeded outside [0, 50].
double dickman_rho(double u);

/// x * rho(log x / log y); RangeExceeded when log x / log y leaves the table.
double psi_estimate(double x, double y);

/// Lower-bound count of triples built from exactly K distinct primes below
/// y = (log H)^kappa, via log-gamma binomials.
struct HeuristicCount {
  u64 K = 0;
  u64 y = 0;
  u64 pi_y = 0;
  double log_count = 0;           // log C(pi,K) + log C(pi-K,K) + log C(pi-2K,K)
  double comparison_exponent = 0; // 3 (1 - 1/kappa) log H
};
HeuristicCount heuristic_count(u128 H, double kappa);

}  // namespace xyzlab
