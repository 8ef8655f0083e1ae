#pragma once

#include <vector>

#include "heunref/specfun/heun_params.hpp"

namespace heunref {

struct OdeOptions {
  double rtol = 1e-11;
  double atol = 1e-14;
  double min_step_rel = 1e-13;  // steps below this times max(1, |x|) count as underflow
  long max_steps = 2000000;
};

struct OdeState {
  double x = 0.0;
  double y = 0.0;
  double y1 = 0.0;
};

/// Carries (y, y') of the Heun equation from s.x to x_target with the
/// Dormand-Prince 5(4) pair. Raises PropagationError when the segment touches
/// 0, 1 or a, or the step size underflows.
OdeState propagate(const HeunParams& p, OdeState s, double x_target, const OdeOptions& opt = {});

/// (y, y') at each of xs, integrating along x_start -> xs[0] -> xs[1] -> ...
/// from general initial data.
std::vector<OdeState> ode_solve(const HeunParams& p, OdeState start, const std::vector<double>& xs,
                                const OdeOptions& opt = {});

/// Initial data of H_l at x_start from its first 30 series terms. Raises
/// PropagationError when the tail bound there exceeds 1e-14 (1 + |y|).
OdeState series_start(const HeunParams& p, double x_start);

/// H_l and H_l' at xs by integration from x_start (series-initialized).
std::vector<OdeState> ode_oracle(const HeunParams& p, double x_start, const std::vector<double>& xs,
                                 const OdeOptions& opt = {});

}  // namespace heunref
