#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace xyzlab {

/// Gauss-Legendre nodes/weights on [-1, 1], computed once per order and cached.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

struct QuadResult {
  double value = 0;
  double error_bound = 0;  // accumulated |G31 - G15| over accepted panels
};

/// Adaptive panel integration with nested G15/G31 estimates.
/// Splits until each panel's error estimate fits its share of the budget.
QuadResult adaptive_gauss(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol);

}  // namespace xyzlab
