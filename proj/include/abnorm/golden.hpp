#ifndef ABNORM_GOLDEN_HPP
#define ABNORM_GOLDEN_HPP

#include <cmath>
#include <utility>

namespace abnorm {

struct LineSearchResult {
  double x;
  double fx;
  int iterations;
};

/// Golden-section minimization of a unimodal f on [lo, hi], stopping when the
/// bracket is narrower than tol. The returned point is the best one evaluated.
template <typename F>
LineSearchResult golden_section_minimize(F&& f, double lo, double hi, double tol, int max_iters = 500) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  while ((b - a) > tol && it < max_iters) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++it;
  }
  return fc <= fd ? LineSearchResult{c, fc, it} : LineSearchResult{d, fd, it};
}

template <typename F>
LineSearchResult golden_section_maximize(F&& f, double lo, double hi, double tol, int max_iters = 500) {
  LineSearchResult r = golden_section_minimize([&f](double x) { return -f(x); }, lo, hi, tol, max_iters);
  r.fx = -r.fx;
  return r;
}

}  // namespace abnorm

#endif  // ABNORM_GOLDEN_HPP
