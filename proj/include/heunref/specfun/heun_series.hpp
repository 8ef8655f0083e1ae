#pragma once

#include <vector>

#include "heunref/dual.hpp"
#include "heunref/specfun/heun_params.hpp"

namespace heunref {

/// Coefficients c_0..c_N of the origin-analytic local Heun solution.
struct SeriesExpansion {
  std::vector<double> coeffs;
  double radius = 1.0;
  double truncation_bound = 0.0;  // estimated tail at the point it was built for
};

/// Value and derivatives of H_l at one point, with error information.
struct HeunEval {
  Jet jet;
  double tail_bound = 0.0;   // estimated magnitude of the dropped tail
  double abs_sum = 0.0;      // sum |c_k x^k|, scale of rounding error
  int terms = 0;
};

/// c_0..c_n by the three-term recurrence
///   a(j+1)(j+g) c_{j+1} = [j((j-1+g)(1+a) + a d + e) + q] c_j - (j-1+al)(j-1+be) c_{j-1}.
/// The tail estimate refers to the point x_eval.
SeriesExpansion heun_series_coeffs(const HeunParams& p, int n, double x_eval = 0.0);

/// Largest |x| accepted by the series evaluators: 0.9 min(1, |a|).
double heun_safe_radius(const HeunParams& p);

/// H_l, H_l', H_l'' in one pass of the adaptively truncated series.
HeunEval heun_l_eval(const HeunParams& p, double x);

double heun_l(const HeunParams& p, double x);
double heun_l_prime(const HeunParams& p, double x);
Jet heun_l_jet(const HeunParams& p, double x);

Dual heun_l(const HeunParams& p, const Dual& x);
Dual heun_l_prime(const HeunParams& p, const Dual& x);
Jet heun_l(const HeunParams& p, const Jet& x);

}  // namespace heunref
