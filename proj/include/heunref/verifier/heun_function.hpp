#pragma once

#include <memory>
#include <vector>

#include "heunref/dual.hpp"
#include "heunref/specfun/heun_params.hpp"
#include "heunref/verifier/ode_oracle.hpp"

namespace heunref {

/// H_l(a, q; alpha, beta, gamma, delta; x) as a function of x, backed either
/// by the origin series or, for intervals outside the series disk, by the ODE
/// oracle. y'' always comes from the equation itself.
class HeunFunction {
 public:
  static HeunFunction series(const HeunParams& p);
  /// Integrates once from the origin side to [lo, hi], storing anchors; each
  /// evaluation restarts from the nearest anchor. [lo, hi] must not contain 0.
  static HeunFunction anchored(const HeunParams& p, double lo, double hi, int n_anchors = 41);

  const HeunParams& params() const { return p_; }
  bool is_series() const { return anchors_ == nullptr; }

  Jet jet(double x) const;
  double value(double x) const { return jet(x).value; }
  double slope(double x) const { return jet(x).d1; }
  double at(double x) const { return value(x); }
  double slope_at(double x) const { return slope(x); }
  Dual at(const Dual& x) const { return lift(jet(x.v), x); }
  Dual slope_at(const Dual& x) const { return lift_slope(jet(x.v), x); }
  Jet at(const Jet& x) const { return compose(jet(x.value), x); }

 private:
  explicit HeunFunction(const HeunParams& p) : p_(p) {}
  HeunParams p_;
  std::shared_ptr<const std::vector<OdeState>> anchors_;
};

}  // namespace heunref
