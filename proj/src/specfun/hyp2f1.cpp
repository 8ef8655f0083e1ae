#include "heunref/specfun/hyp2f1.hpp"

#include <cmath>
#include <string>

#include "heunref/errors.hpp"
#include "heunref/specfun/heun_params.hpp"

namespace heunref {

namespace {

constexpr int kMaxTerms = 100000;

double direct_series(double a, double b, double c, double z) {
  double sum = 1.0, comp = 0.0;
  double term = 1.0;
  int quiet = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
    if (term == 0.0) return sum + comp;  // terminating series
    quiet = std::fabs(term) < 1e-17 * std::fabs(sum + comp) ? quiet + 1 : 0;
    if (quiet >= 3) return sum + comp;
  }
  throw ConvergenceError("hyp2f1: series did not settle", sum + comp, std::fabs(term));
}

}  // namespace

double hyp2f1(double a, double b, double c, double z) {
  if (is_nonpositive_integer(c))
    throw ParameterError("hyp2f1: c = " + std::to_string(c) + " is a nonpositive integer");
  if (!std::isfinite(z)) throw DomainError("hyp2f1: non-finite argument");
  if (z >= 1.0) throw DomainError("hyp2f1: z = " + std::to_string(z) + " >= 1 is outside the real domain");
  if (z >= 0.9)
    throw DomainError("hyp2f1: z = " + std::to_string(z) + " in [0.9, 1) is not supported");
  if (z <= -9.0)
    throw DomainError("hyp2f1: z = " + std::to_string(z) + " <= -9 is not supported");
  if (z == 0.0) return 1.0;
  if (std::fabs(z) <= 0.5) return direct_series(a, b, c, z);
  if (z > 0.5) {
    // Euler pays off when the transformed series decays faster.
    if (a + b - c > 0.0) return std::pow(1.0 - z, c - a - b) * direct_series(c - a, c - b, c, z);
    return direct_series(a, b, c, z);
  }
  // z < -0.5: Pfaff, w in (1/3, 0.9)
  const double w = z / (z - 1.0);
  return std::pow(1.0 - z, -a) * hyp2f1(a, c - b, c, w);
}

double hyp2f1_prime(double a, double b, double c, double z) {
  if (is_nonpositive_integer(c))
    throw ParameterError("hyp2f1: c = " + std::to_string(c) + " is a nonpositive integer");
  if (a * b == 0.0) {
    hyp2f1(a, b, c, z);  // same domain checks
    return 0.0;
  }
  return a * b / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z);
}

Jet hyp2f1_jet(double a, double b, double c, double z) {
  const double f0 = hyp2f1(a, b, c, z);
  const double f1 = hyp2f1_prime(a, b, c, z);
  const double f2 = a * b / c * hyp2f1_prime(a + 1.0, b + 1.0, c + 1.0, z);
  return {f0, f1, f2};
}

Dual hyp2f1(double a, double b, double c, const Dual& z) {
  return {hyp2f1(a, b, c, z.v), hyp2f1_prime(a, b, c, z.v) * z.d};
}

Jet hyp2f1(double a, double b, double c, const Jet& z) { return compose(hyp2f1_jet(a, b, c, z.value), z); }

}  // namespace heunref
