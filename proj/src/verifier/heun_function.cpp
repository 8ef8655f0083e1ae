#include "heunref/verifier/heun_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "heunref/errors.hpp"
#include "heunref/lagrange/coefficients.hpp"
#include "heunref/specfun/heun_series.hpp"

namespace heunref {

HeunFunction HeunFunction::series(const HeunParams& p) { return HeunFunction(p); }

HeunFunction HeunFunction::anchored(const HeunParams& p, double lo, double hi, int n_anchors) {
  if (!(lo < hi)) throw IntervalError("anchored Heun function needs lo < hi");
  if (lo <= 0.0 && hi >= 0.0) throw IntervalError("anchored interval must not contain the origin");
  if (n_anchors < 2) n_anchors = 2;
  const double side = hi < 0.0 ? -1.0 : 1.0;
  const double x_start = side * 0.1 * p.radius();
  // Walk away from the origin: near end first.
  std::vector<double> xs(static_cast<std::size_t>(n_anchors));
  for (int i = 0; i < n_anchors; ++i) {
    const double t = static_cast<double>(i) / (n_anchors - 1);
    xs[static_cast<std::size_t>(i)] = side > 0 ? lo + t * (hi - lo) : hi - t * (hi - lo);
  }
  HeunFunction f(p);
  f.anchors_ = std::make_shared<const std::vector<OdeState>>(ode_oracle(p, x_start, xs));
  return f;
}

Jet HeunFunction::jet(double x) const {
  if (!anchors_) return heun_l_jet(p_, x);
  const auto& an = *anchors_;
  const auto best = std::min_element(an.begin(), an.end(), [x](const OdeState& u, const OdeState& v) {
    return std::fabs(u.x - x) < std::fabs(v.x - x);
  });
  const OdeState s = propagate(p_, *best, x);
  return {s.y, s.y1, -heun_P(p_, x) * s.y1 - heun_Q(p_, x) * s.y};
}

}  // namespace heunref
