#pragma once

#include <functional>

#include "heunref/dual.hpp"
#include "heunref/lagrange/coefficients.hpp"
#include "heunref/lagrange/h_builders.hpp"

namespace heunref {

using JetFn = std::function<Jet(double)>;
using WeightFn = std::function<double(double)>;

/// f (h'' + P h' + Q h) y, the integrand of the master identity.
double conway_lhs_integrand(const CoefficientPair& cp, const WeightFn& fw, const HChoice& h, const JetFn& y, double x);

/// f (y h' - h y'), its antiderivative.
double conway_rhs(const WeightFn& fw, const HChoice& h, const JetFn& y, double x);

/// y'' = -P y' - Q y.
double second_derivative_via_ode(const CoefficientPair& cp, double y, double y1, double x);

/// Completes a (y, y') pair to a jet using the ODE.
Jet ode_jet(const CoefficientPair& cp, double y, double y1, double x);

}  // namespace heunref
