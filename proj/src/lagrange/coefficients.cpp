#include "heunref/lagrange/coefficients.hpp"

#include <cmath>
#include <string>

#include "heunref/errors.hpp"

namespace heunref {

bool CoefficientPair::is_singular(double x) const {
  for (double s : singular_points)
    if (x == s) return true;
  return false;
}

CoefficientPair heun_coefficients(const HeunParams& p) {
  return {[p](double x) { return heun_P(p, x); }, [p](double x) { return heun_Q(p, x); }, {0.0, 1.0, p.a()}};
}

CoefficientPair conjugate_coefficients(const HeunParams& p) {
  return {[p](double x) { return heun_P(p, x); },
          [p](double x) { return (p.alpha() * p.beta() * x + p.q()) / (x * (x - 1.0) * (x - p.a())); },
          {0.0, 1.0, p.a()}};
}

namespace {

double real_power(double b, double e, BranchMode mode) {
  if (e == 0.0) return 1.0;
  if (b >= 0.0) return std::pow(b, e);
  if (e == std::round(e)) return std::pow(b, e);
  if (mode == BranchMode::Strict)
    throw BranchError("negative base " + std::to_string(b) + " with non-integer exponent " + std::to_string(e));
  return std::pow(-b, e);
}

}  // namespace

double weight_f(double gamma, double delta, double epsilon, double a, double x, BranchMode mode) {
  if (x == 0.0 || x == 1.0 || x == a) throw DomainError("weight_f: x = " + std::to_string(x) + " is singular");
  return real_power(x, gamma, mode) * real_power(x - 1.0, delta, mode) * real_power(x - a, epsilon, mode);
}

double weight_f(const HeunParams& p, double x, BranchMode mode) {
  return weight_f(p.gamma(), p.delta(), p.epsilon(), p.a(), x, mode);
}

}  // namespace heunref
