#include "xyzlab/weight.hpp"

#include <cmath>

namespace xyzlab {

namespace {

// C-infinity glue rising 0 -> 1 on [0, 1]
double glue(double t) {
  if (t <= 0) return 0;
  if (t >= 1) return 1;
  double a = std::exp(-1.0 / t);
  double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

}  // namespace

WeightFunction WeightFunction::zero() {
  WeightFunction w;
  w.epsilon = 0;
  w.eval = [](double) { return 0.0; };
  return w;
}

WeightFunction bump(double eps) {
  if (!(eps > 0) || !(eps < 0.5)) throw BadEpsilon("bump needs 0 < eps < 1/2");
  WeightFunction w;
  w.epsilon = eps;
  w.eval = [eps](double t) {
    const double half = eps / 2.0;
    if (t <= half || t >= 1.0 - half) return 0.0;
    if (t < eps) return glue((t - half) / half);
    if (t > 1.0 - eps) return glue((1.0 - half - t) / half);
    return 1.0;
  };
  return w;
}

}  // namespace xyzlab
