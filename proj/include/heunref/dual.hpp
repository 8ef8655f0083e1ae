#pragma once

// Forward-mode dual numbers. The verifier differentiates every claimed
// antiderivative with these, so derivative residuals never involve finite
// differences.

#include <cmath>

namespace heunref {

struct Dual {
  double v = 0.0;  // value
  double d = 0.0;  // derivative with respect to the seed variable

  constexpr Dual() = default;
  constexpr Dual(double value) : v(value), d(0.0) {}  // NOLINT: implicit lift of constants
  constexpr Dual(double value, double slope) : v(value), d(slope) {}

  static constexpr Dual variable(double x) { return {x, 1.0}; }

  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
  Dual& operator*=(const Dual& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
  Dual& operator/=(const Dual& o) {
    d = (d * o.v - v * o.d) / (o.v * o.v);
    v /= o.v;
    return *this;
  }
};

inline Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
inline Dual operator+(Dual a, const Dual& b) { return a += b; }
inline Dual operator-(Dual a, const Dual& b) { return a -= b; }
inline Dual operator*(Dual a, const Dual& b) { return a *= b; }
inline Dual operator/(Dual a, const Dual& b) { return a /= b; }
inline Dual operator+(Dual a, double b) { a.v += b; return a; }
inline Dual operator+(double a, Dual b) { b.v += a; return b; }
inline Dual operator-(Dual a, double b) { a.v -= b; return a; }
inline Dual operator-(double a, const Dual& b) { return {a - b.v, -b.d}; }
inline Dual operator*(const Dual& a, double b) { return {a.v * b, a.d * b}; }
inline Dual operator*(double a, const Dual& b) { return {a * b.v, a * b.d}; }
inline Dual operator/(const Dual& a, double b) { return {a.v / b, a.d / b}; }
inline Dual operator/(double a, const Dual& b) { return {a / b.v, -a * b.d / (b.v * b.v)}; }

inline Dual exp(const Dual& a) {
  const double e = std::exp(a.v);
  return {e, e * a.d};
}
inline Dual log(const Dual& a) { return {std::log(a.v), a.d / a.v}; }
inline Dual sqrt(const Dual& a) {
  const double s = std::sqrt(a.v);
  return {s, a.d / (2.0 * s)};
}
inline Dual sin(const Dual& a) { return {std::sin(a.v), std::cos(a.v) * a.d}; }
inline Dual cos(const Dual& a) { return {std::cos(a.v), -std::sin(a.v) * a.d}; }
inline Dual asin(const Dual& a) { return {std::asin(a.v), a.d / std::sqrt(1.0 - a.v * a.v)}; }
inline Dual atan(const Dual& a) { return {std::atan(a.v), a.d / (1.0 + a.v * a.v)}; }
inline Dual abs(const Dual& a) { return a.v < 0.0 ? -a : a; }

/// Real power with a real exponent; the base must be positive unless the
/// exponent is integral.
inline Dual pow(const Dual& a, double e) {
  const double p = std::pow(a.v, e);
  if (e == 0.0) return {1.0, 0.0};
  return {p, e * std::pow(a.v, e - 1.0) * a.d};
}

inline double value_of(double x) { return x; }
inline double value_of(const Dual& x) { return x.v; }

inline Dual acos(const Dual& a) { return {std::acos(a.v), -a.d / std::sqrt(1.0 - a.v * a.v)}; }

/// Truncated Taylor jet of order two: value, first and second derivative.
/// Doubles as the record a kernel returns for f, f', f'' at a point and as an
/// arithmetic type, so trial functions get exact h' and h''.
struct Jet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  constexpr Jet() = default;
  constexpr Jet(double v) : value(v) {}  // NOLINT: implicit lift of constants
  constexpr Jet(double v, double a, double b) : value(v), d1(a), d2(b) {}

  static constexpr Jet variable(double x) { return {x, 1.0, 0.0}; }
};

inline Jet operator-(const Jet& a) { return {-a.value, -a.d1, -a.d2}; }
inline Jet operator+(const Jet& a, const Jet& b) { return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2}; }
inline Jet operator-(const Jet& a, const Jet& b) { return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2}; }
inline Jet operator*(const Jet& a, const Jet& b) {
  return {a.value * b.value, a.d1 * b.value + a.value * b.d1,
          a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2};
}
inline Jet operator/(const Jet& a, const Jet& b) {
  const double r = a.value / b.value;
  const double r1 = (a.d1 - r * b.d1) / b.value;
  const double r2 = (a.d2 - 2.0 * r1 * b.d1 - r * b.d2) / b.value;
  return {r, r1, r2};
}
inline Jet operator+(const Jet& a, double b) { return {a.value + b, a.d1, a.d2}; }
inline Jet operator+(double a, const Jet& b) { return b + a; }
inline Jet operator-(const Jet& a, double b) { return {a.value - b, a.d1, a.d2}; }
inline Jet operator-(double a, const Jet& b) { return {a - b.value, -b.d1, -b.d2}; }
inline Jet operator*(const Jet& a, double b) { return {a.value * b, a.d1 * b, a.d2 * b}; }
inline Jet operator*(double a, const Jet& b) { return b * a; }
inline Jet operator/(const Jet& a, double b) { return {a.value / b, a.d1 / b, a.d2 / b}; }
inline Jet operator/(double a, const Jet& b) { return Jet(a) / b; }

/// Chain rule: given the jet of g at u.value (derivatives in u), returns the
/// jet of g(u(x)).
inline Jet compose(const Jet& g, const Jet& u) {
  return {g.value, g.d1 * u.d1, g.d2 * u.d1 * u.d1 + g.d1 * u.d2};
}

inline Jet exp(const Jet& a) {
  const double e = std::exp(a.value);
  return compose({e, e, e}, a);
}
inline Jet log(const Jet& a) {
  return compose({std::log(a.value), 1.0 / a.value, -1.0 / (a.value * a.value)}, a);
}
inline Jet sqrt(const Jet& a) {
  const double s = std::sqrt(a.value);
  return compose({s, 0.5 / s, -0.25 / (s * a.value)}, a);
}
inline Jet sin(const Jet& a) {
  const double s = std::sin(a.value), c = std::cos(a.value);
  return compose({s, c, -s}, a);
}
inline Jet cos(const Jet& a) {
  const double s = std::sin(a.value), c = std::cos(a.value);
  return compose({c, -s, -c}, a);
}
inline Jet atan(const Jet& a) {
  const double w = 1.0 / (1.0 + a.value * a.value);
  return compose({std::atan(a.value), w, -2.0 * a.value * w * w}, a);
}
inline Jet asin(const Jet& a) {
  const double r = 1.0 / std::sqrt(1.0 - a.value * a.value);
  return compose({std::asin(a.value), r, a.value * r * r * r}, a);
}
inline Jet acos(const Jet& a) {
  const double r = 1.0 / std::sqrt(1.0 - a.value * a.value);
  return compose({std::acos(a.value), -r, -a.value * r * r * r}, a);
}
inline Jet abs(const Jet& a) { return a.value < 0.0 ? -a : a; }
inline Jet pow(const Jet& a, double e) {
  if (e == 0.0) return Jet(1.0);
  const double p = std::pow(a.value, e);
  return compose({p, e * p / a.value, e * (e - 1.0) * p / (a.value * a.value)}, a);
}

inline double value_of(const Jet& x) { return x.value; }

/// Lift f, known through its jet at x.v, to a dual number at x.
inline Dual lift(const Jet& j, const Dual& x) { return {j.value, j.d1 * x.d}; }
/// Lift f' to a dual number at x.
inline Dual lift_slope(const Jet& j, const Dual& x) { return {j.d1, j.d2 * x.d}; }
inline double lift(const Jet& j, double) { return j.value; }
inline double lift_slope(const Jet& j, double) { return j.d1; }

/// Phase-free real power: sgn(b)^n * |b|^(e0+n). For a positive base this is
/// b^(e0+n). For a negative base it equals b^(e0+n) divided by the constant
/// phase (-1)^e0, so two sides of an identity that share the reference
/// exponent e0 of the same base stay consistent.
inline double ppow(double b, double e0, int n = 0) {
  const double mag = std::pow(std::fabs(b), e0 + n);
  return (b < 0.0 && (n % 2 != 0)) ? -mag : mag;
}
inline Dual ppow(const Dual& b, double e0, int n = 0) {
  const double p = ppow(b.v, e0, n);
  const double e = e0 + n;
  return {p, e == 0.0 ? 0.0 : e * p / b.v * b.d};
}
inline Jet ppow(const Jet& b, double e0, int n = 0) {
  const double e = e0 + n;
  const double p = ppow(b.value, e0, n);
  if (e == 0.0) return Jet(p);
  return compose({p, e * p / b.value, e * (e - 1.0) * p / (b.value * b.value)}, b);
}

}  // namespace heunref
