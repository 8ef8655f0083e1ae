#include "heunref/specfun/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "heunref/errors.hpp"

namespace heunref {

namespace {

// Duplication algorithms after Carlson (1995). kR is the relative error
// target of the fifth-order series that finishes each iteration.
constexpr double kR = 1e-16;

// s * R_F(c2, 1 - k^2 s^2, 1), the single Carlson call behind F and K.
double rf_form(double s, double c2, double k) { return s * carlson_rf(c2, 1.0 - k * k * s * s, 1.0); }

void check_k(double k, bool allow_one, const char* who) {
  const bool ok = allow_one ? (k >= 0.0 && k <= 1.0) : (k >= 0.0 && k < 1.0);
  if (!ok) throw DomainError(std::string(who) + ": modulus k = " + std::to_string(k) + " out of range");
}

}  // namespace

double carlson_rf(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z < 0.0 || !std::isfinite(x + y + z))
    throw DomainError("carlson_rf: arguments must be finite and nonnegative");
  if ((x == 0.0) + (y == 0.0) + (z == 0.0) > 1) throw DomainError("carlson_rf: more than one argument is zero");
  const double x0 = x, y0 = y, z0 = z;
  const double a0 = (x + y + z) / 3.0;
  double q = std::pow(3.0 * kR, -1.0 / 6.0) * std::max({std::fabs(a0 - x), std::fabs(a0 - y), std::fabs(a0 - z)});
  double a = a0;
  double f = 1.0;  // 4^-n
  while (q >= std::fabs(a)) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lam = sx * sy + sx * sz + sy * sz;
    a = 0.25 * (a + lam);
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    z = 0.25 * (z + lam);
    q *= 0.25;
    f *= 0.25;
  }
  const double X = f * (a0 - x0) / a;
  const double Y = f * (a0 - y0) / a;
  const double Z = -(X + Y);
  const double e2 = X * Y - Z * Z;
  const double e3 = X * Y * Z;
  return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / std::sqrt(a);
}

double carlson_rd(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z <= 0.0 || !std::isfinite(x + y + z))
    throw DomainError("carlson_rd: need x, y >= 0 and z > 0");
  if (x == 0.0 && y == 0.0) throw DomainError("carlson_rd: x and y are both zero");
  const double x0 = x, y0 = y;
  const double a0 = (x + y + 3.0 * z) / 5.0;
  double q = std::pow(0.25 * kR, -1.0 / 6.0) * std::max({std::fabs(a0 - x), std::fabs(a0 - y), std::fabs(a0 - z)});
  double a = a0;
  double f = 1.0;
  double sum = 0.0;
  while (q >= std::fabs(a)) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lam = sx * sy + sx * sz + sy * sz;
    sum += f / (sz * (z + lam));
    a = 0.25 * (a + lam);
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    z = 0.25 * (z + lam);
    q *= 0.25;
    f *= 0.25;
  }
  const double X = f * (a0 - x0) / a;
  const double Y = f * (a0 - y0) / a;
  const double Z = -(X + Y) / 3.0;
  const double xy = X * Y, z2 = Z * Z;
  const double e2 = xy - 6.0 * z2;
  const double e3 = (3.0 * xy - 8.0 * z2) * Z;
  const double e4 = 3.0 * (xy - z2) * z2;
  const double e5 = xy * z2 * Z;
  const double series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0 -
                        9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
  return f * series / (a * std::sqrt(a)) + 3.0 * sum;
}

double ellip_f(double phi, double k) {
  if (!(phi >= 0.0 && phi <= std::numbers::pi / 2))
    throw DomainError("ellip_f: phi = " + std::to_string(phi) + " outside [0, pi/2]");
  check_k(k, false, "ellip_f");
  if (phi == 0.0) return 0.0;
  if (phi == std::numbers::pi / 2) return rf_form(1.0, 0.0, k);
  const double s = std::sin(phi), c = std::cos(phi);
  return rf_form(s, c * c, k);
}

double ellip_k(double k) {
  check_k(k, false, "ellip_k");
  return rf_form(1.0, 0.0, k);
}

double ellip_e(double k) {
  check_k(k, true, "ellip_e");
  if (k == 1.0) return 1.0;
  const double kc2 = 1.0 - k * k;
  return carlson_rf(0.0, kc2, 1.0) - k * k / 3.0 * carlson_rd(0.0, kc2, 1.0);
}

Jet ellip_k_jet(double k) {
  const double K = ellip_k(k);
  if (k == 0.0) return {K, 0.0, std::numbers::pi / 4};
  const double E = ellip_e(k);
  const double kc2 = 1.0 - k * k;
  const double d1 = E / (k * kc2) - K / k;
  // Legendre: k(1-k^2) K'' + (1-3k^2) K' - k K = 0
  const double d2 = ((3.0 * k * k - 1.0) * d1 + k * K) / (k * kc2);
  return {K, d1, d2};
}

Jet ellip_e_jet(double k) {
  const double E = ellip_e(k);
  if (k == 0.0) return {E, 0.0, -std::numbers::pi / 4};
  if (k == 1.0) throw DomainError("ellip_e: derivatives diverge at k = 1");
  const double K = ellip_k(k);
  const double d1 = (E - K) / k;
  // Legendre: E'' = -E'/k - E/(1-k^2)
  const double d2 = -d1 / k - E / (1.0 - k * k);
  return {E, d1, d2};
}

Dual ellip_f(const Dual& phi, double k) {
  const double s = std::sin(phi.v);
  return {ellip_f(phi.v, k), phi.d / std::sqrt(1.0 - k * k * s * s)};
}

Jet ellip_f(const Jet& phi, double k) {
  const double s = std::sin(phi.value), c = std::cos(phi.value);
  const double w = 1.0 - k * k * s * s;
  const double d1 = 1.0 / std::sqrt(w);
  const double d2 = k * k * s * c / (w * std::sqrt(w));
  return compose({ellip_f(phi.value, k), d1, d2}, phi);
}

Dual ellip_k(const Dual& k) { return lift(ellip_k_jet(k.v), k); }
Dual ellip_e(const Dual& k) { return lift(ellip_e_jet(k.v), k); }
Jet ellip_k(const Jet& k) { return compose(ellip_k_jet(k.value), k); }
Jet ellip_e(const Jet& k) { return compose(ellip_e_jet(k.value), k); }

}  // namespace heunref
