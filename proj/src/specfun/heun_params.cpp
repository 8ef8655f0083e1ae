#include "heunref/specfun/heun_params.hpp"

#include <cmath>
#include <cstdio>

#include "heunref/errors.hpp"

namespace heunref {

bool is_nonpositive_integer(double g) {
  if (g > 0.5) return false;
  const double r = std::round(g);
  return std::fabs(g - r) <= 8.0 * 2.220446049250313e-16 * std::fmax(1.0, std::fabs(g));
}

HeunParams::HeunParams(double a, double q, double alpha, double beta, double gamma, double delta)
    : a_(a), q_(q), alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta),
      epsilon_(alpha + beta + 1.0 - gamma - delta) {
  if (!(std::isfinite(a) && std::isfinite(q) && std::isfinite(alpha) && std::isfinite(beta) &&
        std::isfinite(gamma) && std::isfinite(delta)))
    throw ParameterError("Heun parameters must be finite");
  if (a == 0.0 || a == 1.0) throw ParameterError("singular point a must not be 0 or 1");
  if (is_nonpositive_integer(gamma))
    throw ParameterError("gamma must not be zero or a negative integer");
}

double HeunParams::radius() const { return std::fmin(1.0, std::fabs(a_)); }

std::string HeunParams::str() const {
  char buf[256];
  std::snprintf(buf, sizeof buf, "(a=%.17g, q=%.17g; alpha=%.17g, beta=%.17g, gamma=%.17g, delta=%.17g)",
                a_, q_, alpha_, beta_, gamma_, delta_);
  return buf;
}

}  // namespace heunref
