#include "heunref/lagrange/conway.hpp"

#include <string>

#include "heunref/errors.hpp"

namespace heunref {

namespace {

void require_regular(const CoefficientPair& cp, double x) {
  if (cp.is_singular(x)) throw DomainError("x = " + std::to_string(x) + " is a singular point of the equation");
}

}  // namespace

double conway_lhs_integrand(const CoefficientPair& cp, const WeightFn& fw, const HChoice& h, const JetFn& y, double x) {
  require_regular(cp, x);
  const Jet hj = h.jet(x);
  return fw(x) * (hj.d2 + cp.p_at(x) * hj.d1 + cp.q_at(x) * hj.value) * y(x).value;
}

double conway_rhs(const WeightFn& fw, const HChoice& h, const JetFn& y, double x) {
  const Jet hj = h.jet(x);
  const Jet yj = y(x);
  return fw(x) * (yj.value * hj.d1 - hj.value * yj.d1);
}

double second_derivative_via_ode(const CoefficientPair& cp, double y, double y1, double x) {
  require_regular(cp, x);
  return -cp.p_at(x) * y1 - cp.q_at(x) * y;
}

Jet ode_jet(const CoefficientPair& cp, double y, double y1, double x) {
  return {y, y1, second_derivative_via_ode(cp, y, y1, x)};
}

}  // namespace heunref
