#pragma once

#include <string>

namespace heunref {

/// Parameters of the Heun equation
///   y'' + (g/x + d/(x-1) + e/(x-a)) y' + (ab x - q)/(x(x-1)(x-a)) y = 0
/// with the Fuchsian constraint e = alpha + beta + 1 - gamma - delta.
/// epsilon is derived on construction and never set directly.
class HeunParams {
 public:
  HeunParams(double a, double q, double alpha, double beta, double gamma, double delta);

  double a() const { return a_; }
  double q() const { return q_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  double delta() const { return delta_; }
  double epsilon() const { return epsilon_; }

  /// Series radius of the origin solution, min(1, |a|).
  double radius() const;

  HeunParams with_q(double q) const { return {a_, q, alpha_, beta_, gamma_, delta_}; }

  std::string str() const;

 private:
  double a_, q_, alpha_, beta_, gamma_, delta_, epsilon_;
};

/// True when g is 0, -1, -2, ... (within a few ulps).
bool is_nonpositive_integer(double g);

}  // namespace heunref
