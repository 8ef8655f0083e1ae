#pragma once

#include <functional>
#include <vector>

#include "heunref/dual.hpp"
#include "heunref/specfun/heun_params.hpp"

namespace heunref {

/// P and Q of y'' + P y' + Q y = 0 together with the points where they blow up.
struct CoefficientPair {
  std::function<double(double)> p_at;
  std::function<double(double)> q_at;
  std::vector<double> singular_points;

  bool is_singular(double x) const;
};

template <class T>
T heun_P(const HeunParams& p, const T& x) {
  return p.gamma() / x + p.delta() / (x - 1.0) + p.epsilon() / (x - p.a());
}

template <class T>
T heun_Q(const HeunParams& p, const T& x) {
  return (p.alpha() * p.beta() * x - p.q()) / (x * (x - 1.0) * (x - p.a()));
}

/// K(x) = x(x-1)(x-a) P(x) = k2 x^2 + k1 x + k0.
template <class T>
T heun_K(const HeunParams& p, const T& x) {
  const double k2 = p.alpha() + p.beta() + 1.0;
  const double k1 = -(p.a() * (p.gamma() + p.delta()) + p.alpha() + p.beta() + 1.0 - p.delta());
  const double k0 = p.a() * p.gamma();
  return (k2 * x + k1) * x + k0;
}

CoefficientPair heun_coefficients(const HeunParams& p);
/// Same P, with Q replaced by Qbar = (ab x + q)/(x(x-1)(x-a)).
CoefficientPair conjugate_coefficients(const HeunParams& p);

enum class BranchMode {
  PositiveBase,  // integer exponents keep their sign, otherwise |b|^e
  Strict         // negative base with a non-integer exponent is an error
};

/// f = x^g (x-1)^d (x-a)^e, the integrating factor exp(int P).
double weight_f(const HeunParams& p, double x, BranchMode mode = BranchMode::PositiveBase);
/// Same with raw exponents, for exponent sets HeunParams rejects (gamma = 0).
double weight_f(double gamma, double delta, double epsilon, double a, double x,
                BranchMode mode = BranchMode::PositiveBase);

/// Phase-free weight with shifted exponents: x^(g+ng) (x-1)^(d+nd) (x-a)^(e+ne),
/// each factor evaluated as sgn(b)^n |b|^(e0+n). Both sides of an identity use
/// the same reference exponents, so the dropped phase is common to both.
template <class T>
T weight_shifted(const HeunParams& p, const T& x, int ng, int nd, int ne) {
  return ppow(x, p.gamma(), ng) * ppow(x - 1.0, p.delta(), nd) * ppow(x - p.a(), p.epsilon(), ne);
}

}  // namespace heunref
