#pragma once

#include <functional>

#include "xyzlab/errors.hpp"

namespace xyzlab {

/// A smooth cutoff weight on [0, 1]: 1 on [eps, 1-eps], 0 outside
/// [eps/2, 1-eps/2], with C-infinity exp(-1/t) transitions, symmetric about 1/2.
struct WeightFunction {
  double epsilon = 0;
  std::function<double(double)> eval;

  double operator()(double w) const { return eval(w); }

  /// Identically-zero weight (empty support).
  static WeightFunction zero();
};

/// The standard plateau bump; BadEpsilon unless 0 < eps < 1/2.
WeightFunction bump(double eps);

}  // namespace xyzlab
