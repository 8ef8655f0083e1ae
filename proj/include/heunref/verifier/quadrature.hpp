#pragma once

#include <functional>

namespace heunref {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // sum of |K15 - G7| over accepted panels
  int evaluations = 0;
  int max_depth = 0;
};

/// One 15-point Gauss-Kronrod panel with its embedded 7-point Gauss estimate.
QuadResult gauss_kronrod15(const std::function<double(double)>& f, double lo, double hi);

/// Adaptive GK15 with recursive bisection until the summed local error is
/// below tol (1 + |value|). A panel deeper than 50 bisections, or more than
/// 300000 integrand calls, raises ConvergenceError carrying the partial estimate. lo > hi integrates with
/// the orientation reversed; lo == hi gives 0.
QuadResult quad_adaptive(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace heunref
