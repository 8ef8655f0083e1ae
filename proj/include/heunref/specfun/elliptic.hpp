#pragma once

#include "heunref/dual.hpp"

namespace heunref {

/// Carlson's symmetric integral R_F(x, y, z); at most one argument may be zero.
double carlson_rf(double x, double y, double z);
/// Carlson's R_D(x, y, z); z > 0, at most one of x, y zero.
double carlson_rd(double x, double y, double z);

/// Incomplete integral of the first kind, phi in [0, pi/2], k in [0, 1).
double ellip_f(double phi, double k);
/// Complete integrals. K: k in [0, 1). E: k in [0, 1].
double ellip_k(double k);
double ellip_e(double k);

/// K and E with their first two k-derivatives (k in (0, 1); the k -> 0 limits
/// are used at k = 0).
Jet ellip_k_jet(double k);
Jet ellip_e_jet(double k);

/// Derivatives in phi only; the modulus is a fixed parameter.
Dual ellip_f(const Dual& phi, double k);
Jet ellip_f(const Jet& phi, double k);
Dual ellip_k(const Dual& k);
Dual ellip_e(const Dual& k);
Jet ellip_k(const Jet& k);
Jet ellip_e(const Jet& k);

}  // namespace heunref
