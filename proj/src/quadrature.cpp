#include "xyzlab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "xyzlab/errors.hpp"

namespace xyzlab {

static GaussRule compute_rule(int n) {
  GaussRule r;
  r.nodes.resize(size_t(n));
  r.weights.resize(size_t(n));
  // Newton on P_n from the asymptotic initial guess; converges in a handful
  // of steps for every root.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one final refresh of pp at the converged node
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        pp = n * (x * p1 - p0) / (x * x - 1.0);
        break;
      }
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.nodes[size_t(i)] = -x;
    r.weights[size_t(i)] = w;
    r.nodes[size_t(n - 1 - i)] = x;
    r.weights[size_t(n - 1 - i)] = w;
  }
  if (n % 2 == 1) r.nodes[size_t(n / 2)] = 0.0;
  return r;
}

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lk(m);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

static double panel_gauss(const std::function<double(double)>& f, double a, double b,
                          const GaussRule& r) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0;
  for (size_t i = 0; i < r.nodes.size(); ++i) acc += r.weights[i] * f(mid + half * r.nodes[i]);
  return acc * half;
}

QuadResult adaptive_gauss(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol) {
  const GaussRule& g15 = gauss_legendre(15);
  const GaussRule& g31 = gauss_legendre(31);
  struct Panel {
    double a, b, coarse, fine;
  };
  auto make = [&](double lo, double hi) {
    return Panel{lo, hi, panel_gauss(f, lo, hi, g15), panel_gauss(f, lo, hi, g31)};
  };
  std::vector<Panel> work{make(a, b)};
  double estimate = work[0].fine;
  QuadResult out;
  size_t panels = 0;
  while (!work.empty()) {
    if (++panels > 2'000'000) throw Error("adaptive quadrature failed to converge");
    Panel p = work.back();
    work.pop_back();
    double err = std::abs(p.fine - p.coarse);
    double budget = (std::abs(p.b - p.a) / std::abs(b - a)) *
                    std::max(abs_tol, rel_tol * std::abs(estimate));
    if (err <= budget || std::abs(p.b - p.a) < 1e-15 * std::abs(b - a)) {
      out.value += p.fine;
      out.error_bound += err;
      continue;
    }
    double mid = 0.5 * (p.a + p.b);
    Panel left = make(p.a, mid), right = make(mid, p.b);
    estimate += left.fine + right.fine - p.fine;
    work.push_back(left);
    work.push_back(right);
  }
  return out;
}

}  // namespace xyzlab
