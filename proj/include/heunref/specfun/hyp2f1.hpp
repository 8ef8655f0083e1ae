#pragma once

#include "heunref/dual.hpp"

namespace heunref {

/// Gauss hypergeometric 2F1(a, b; c; z) for real arguments, -9 < z < 0.9.
/// Direct series on |z| <= 0.5, Euler's transformation on (0.5, 0.9) and
/// Pfaff's transformation z -> z/(z-1) below -0.5.
double hyp2f1(double a, double b, double c, double z);

/// d/dz 2F1 = (ab/c) 2F1(a+1, b+1; c+1; z).
double hyp2f1_prime(double a, double b, double c, double z);

/// 2F1 with its first two z-derivatives.
Jet hyp2f1_jet(double a, double b, double c, double z);

Dual hyp2f1(double a, double b, double c, const Dual& z);
Jet hyp2f1(double a, double b, double c, const Jet& z);

}  // namespace heunref
