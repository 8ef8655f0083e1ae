#include "heunref/verifier/ode_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "heunref/errors.hpp"
#include "heunref/lagrange/coefficients.hpp"
#include "heunref/specfun/heun_series.hpp"

namespace heunref {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct Rhs {
  HeunParams p;
  void operator()(double x, double y, double y1, double& dy, double& dy1) const {
    dy = y1;
    dy1 = -heun_P(p, x) * y1 - heun_Q(p, x) * y;
  }
};

void check_path(const HeunParams& p, double from, double to) {
  const double lo = std::min(from, to), hi = std::max(from, to);
  for (double s : {0.0, 1.0, p.a()})
    if (s >= lo && s <= hi)
      throw PropagationError("path [" + std::to_string(lo) + ", " + std::to_string(hi) +
                             "] meets the singular point " + std::to_string(s));
}

double distance_to_singularity(const HeunParams& p, double x) {
  return std::min({std::fabs(x), std::fabs(x - 1.0), std::fabs(x - p.a())});
}

}  // namespace

OdeState propagate(const HeunParams& p, OdeState s, double x_target, const OdeOptions& opt) {
  if (s.x == x_target) return s;
  check_path(p, s.x, x_target);
  const Rhs f{p};
  const double dir = x_target > s.x ? 1.0 : -1.0;
  double h = dir * std::min(std::fabs(x_target - s.x), 0.05 * distance_to_singularity(p, s.x));
  double x = s.x, y = s.y, v = s.y1;
  double k1y, k1v;
  f(x, y, v, k1y, k1v);
  for (long step = 0; step < opt.max_steps; ++step) {
    const double min_step = opt.min_step_rel * std::max(1.0, std::fabs(x));
    // A target closer than the minimum step is reached in one step.
    const bool last = dir * (x + h - x_target) >= 0.0 || std::fabs(x_target - x) <= min_step;
    if (last) h = x_target - x;
    if (std::fabs(h) < min_step && !(last && std::fabs(x_target - x) <= min_step))
      throw PropagationError("step size underflow at x = " + std::to_string(x));
    double k2y, k2v, k3y, k3v, k4y, k4v, k5y, k5v, k6y, k6v, k7y, k7v;
    f(x + c2 * h, y + h * a21 * k1y, v + h * a21 * k1v, k2y, k2v);
    f(x + c3 * h, y + h * (a31 * k1y + a32 * k2y), v + h * (a31 * k1v + a32 * k2v), k3y, k3v);
    f(x + c4 * h, y + h * (a41 * k1y + a42 * k2y + a43 * k3y), v + h * (a41 * k1v + a42 * k2v + a43 * k3v), k4y,
      k4v);
    f(x + c5 * h, y + h * (a51 * k1y + a52 * k2y + a53 * k3y + a54 * k4y),
      v + h * (a51 * k1v + a52 * k2v + a53 * k3v + a54 * k4v), k5y, k5v);
    const double xn = last ? x_target : x + h;
    f(xn, y + h * (a61 * k1y + a62 * k2y + a63 * k3y + a64 * k4y + a65 * k5y),
      v + h * (a61 * k1v + a62 * k2v + a63 * k3v + a64 * k4v + a65 * k5v), k6y, k6v);
    const double yn = y + h * (b1 * k1y + b3 * k3y + b4 * k4y + b5 * k5y + b6 * k6y);
    const double vn = v + h * (b1 * k1v + b3 * k3v + b4 * k4v + b5 * k5v + b6 * k6v);
    f(xn, yn, vn, k7y, k7v);
    const double ey = h * (e1 * k1y + e3 * k3y + e4 * k4y + e5 * k5y + e6 * k6y + e7 * k7y);
    const double ev = h * (e1 * k1v + e3 * k3v + e4 * k4v + e5 * k5v + e6 * k6v + e7 * k7v);
    const double sy = opt.atol + opt.rtol * std::max(std::fabs(y), std::fabs(yn));
    const double sv = opt.atol + opt.rtol * std::max(std::fabs(v), std::fabs(vn));
    const double err = std::max(std::fabs(ey) / sy, std::fabs(ev) / sv);
    if (!std::isfinite(err)) {
      h *= 0.25;
      continue;
    }
    if (err <= 1.0) {
      x = xn;
      y = yn;
      v = vn;
      k1y = k7y;
      k1v = k7v;
      if (last) return {x, y, v};
    }
    const double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h *= err <= 1.0 ? fac : std::min(fac, 1.0);
  }
  throw PropagationError("step budget exhausted before x = " + std::to_string(x_target));
}

std::vector<OdeState> ode_solve(const HeunParams& p, OdeState start, const std::vector<double>& xs,
                                const OdeOptions& opt) {
  std::vector<OdeState> out;
  out.reserve(xs.size());
  OdeState s = start;
  for (double x : xs) {
    s = propagate(p, s, x, opt);
    out.push_back(s);
  }
  return out;
}

OdeState series_start(const HeunParams& p, double x_start) {
  if (x_start == 0.0) return {0.0, 1.0, p.q() / (p.a() * p.gamma())};
  const SeriesExpansion s = heun_series_coeffs(p, 29, x_start);
  double y = 0.0, y1 = 0.0;
  for (int k = 29; k >= 0; --k) {
    y = y * x_start + s.coeffs[k];
    if (k >= 1) y1 = y1 * x_start + k * s.coeffs[k];
  }
  if (!(s.truncation_bound <= 1e-14 * (1.0 + std::fabs(y))))
    throw PropagationError("x_start = " + std::to_string(x_start) + " is too far out for a 30-term start");
  return {x_start, y, y1};
}

std::vector<OdeState> ode_oracle(const HeunParams& p, double x_start, const std::vector<double>& xs,
                                 const OdeOptions& opt) {
  return ode_solve(p, series_start(p, x_start), xs, opt);
}

}  // namespace heunref
