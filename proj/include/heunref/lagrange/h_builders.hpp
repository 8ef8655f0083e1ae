#pragma once

#include <functional>
#include <string>
#include <vector>

#include "heunref/dual.hpp"
#include "heunref/specfun/heun_params.hpp"

namespace heunref {

enum class HMethod { Elementary, Eq2, Eq3, Eq4, Conjugate, Constant };

const char* to_string(HMethod m);

/// A trial function h with h' and h''.
struct HChoice {
  HMethod method = HMethod::Constant;
  std::string label;
  std::function<Jet(double)> jet;
  std::vector<double> extra_singularities;
  /// Qbar of the conjugate equation h solves (Conjugate method only).
  std::function<double(double)> conjugate_q;

  double h_at(double x) const { return jet(x).value; }
  double h1_at(double x) const { return jet(x).d1; }
  double h2_at(double x) const { return jet(x).d2; }
  double at(double x) const { return h_at(x); }
  double slope_at(double x) const { return h1_at(x); }
  Dual at(const Dual& x) const { return lift(jet(x.v), x); }
  Dual slope_at(const Dual& x) const { return lift_slope(jet(x.v), x); }
  Jet at(const Jet& x) const { return compose(jet(x.value), x); }
};

/// Where h' and h'' come from. FromMethod uses the defining relation of the
/// construction (h'' = -P h', h' = -(Q/P) h, h'' = -Q h, ...); Closed
/// differentiates the closed form exactly. They agree whenever the closed
/// form really solves its equation, which the method-residual tests check.
enum class DerivativeSource { FromMethod, Closed };

enum class ElementaryBranch { Sin, Cos, None };

/// h = x^m exp(rho x^ell) {sin(k x) | cos(k x) | 1}.
HChoice build_h_elementary(int m, double rho, int ell, double k, ElementaryBranch branch);

enum class Eq2Variant { Elliptic, Delta0, Eps0 };

/// Solutions of h'' + P h' = 0.
///   Elliptic (gamma = delta = eps = 1/2): h = (2/sqrt a) F(arcsin sqrt x, 1/sqrt a)
///   Delta0 (delta = 0):                   h = x^tau 2F1(eps, tau; 1+tau; x/a)
///   Eps0 (eps = 0):                       h = x^tau 2F1(delta, tau; 1+tau; x)
/// with tau = 1 - gamma != 0.
HChoice build_h_eq2(const HeunParams& p, Eq2Variant variant, DerivativeSource src = DerivativeSource::FromMethod);

enum class DeltaClass { Positive, Zero, Negative, Degenerate };

struct DeltaDiscriminant {
  double delta = 0.0;
  double k0 = 0.0, k1 = 0.0, k2 = 0.0;
  DeltaClass cls = DeltaClass::Degenerate;
};

/// k2 = al+be+1, k1 = -[a(g+d) + al+be+1 - d], k0 = a g, Delta = k0 k2 - k1^2/4.
DeltaDiscriminant delta_discriminant(const HeunParams& p);

/// Solution of P h' + Q h = 0, h = exp(-int (ab x - q)/K). The k2 = 0 cases
/// (linear or constant K) are handled in closed form as well.
HChoice build_h_eq3(const HeunParams& p, DerivativeSource src = DerivativeSource::FromMethod);

/// Throws IntervalError when a singular point of h lies within margin of [lo, hi].
void require_clear(const HChoice& h, double lo, double hi, double margin);

/// Readings of the accessory parameters / q = 0 solutions of h'' + Q h = 0.
enum class Eq4Form { Derived, Printed, PrintedAltGrouping };

struct Eq4Constants {
  double rho = 0.0, omega = 0.0;
  double q_i = 0.0, alpha_i = 0.0, beta_i = 0.0, gamma_i = 0.0;
};

/// Constants of the i-th solution h_i(x) = x^(-alpha_i) (x-a) H_l(1/a, q_i; alpha_i, beta_i, gamma_i, 0; 1/x).
Eq4Constants eq4_constants(const HeunParams& p, int i, Eq4Form form);

/// Solutions of h'' + Q h = 0. Without q_zero: the transformed Heun pair
/// above, valid where |1/x| is inside the series disk of H_l(1/a, ...). With
/// q_zero (requires q = 0): (x-a)(x-1)^(-s) 2F1(., .; .; (a-1)/(x-1)).
/// Derived forms take h'' = -Q h under FromMethod; printed forms are always
/// differentiated in closed form.
HChoice build_h_eq4(const HeunParams& p, int i, bool q_zero, Eq4Form form = Eq4Form::Derived,
                    DerivativeSource src = DerivativeSource::FromMethod);

enum class ConjugateKind {
  NegQ,                 // H_l(a, -q; ...), solves h'' + P h' + Qbar h = 0
  EllipticE,            // E(x'), x' = sqrt(1 - x^2)
  EllipticEModulus,     // E(|x|)
  EllipticEComplement   // E(x') - K(x')
};

/// Solutions of conjugate equations. The elliptic kinds pair with
/// h'' + h'/x + h/(1-x^2) = 0 and need 0 < |x| < 1. EllipticE is always
/// differentiated through Legendre's relations for E, since E(x') does not
/// solve that equation.
HChoice build_h_conjugate(const HeunParams& p, ConjugateKind kind, DerivativeSource src = DerivativeSource::FromMethod);

}  // namespace heunref
