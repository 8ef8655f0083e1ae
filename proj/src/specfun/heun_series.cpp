#include "heunref/specfun/heun_series.hpp"

#include <cmath>
#include <string>

#include "heunref/errors.hpp"

namespace heunref {

namespace {

constexpr double kStopRel = 1e-17;
constexpr int kStopRun = 3;
constexpr int kMaxTerms = 10000;
constexpr double kEps = 2.220446049250313e-16;

// Neumaier's variant of Kahan summation.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct Recurrence {
  double a, q, al, be, ga, de, ep;
  explicit Recurrence(const HeunParams& p)
      : a(p.a()), q(p.q()), al(p.alpha()), be(p.beta()), ga(p.gamma()), de(p.delta()), ep(p.epsilon()) {}
  // c_{j+1} from c_j and c_{j-1}, j >= 1
  double next(int jj, double cj, double cjm1) const {
    const double j = jj;
    const double r = a * (j + 1.0) * (j + ga);
    const double s = j * ((j - 1.0 + ga) * (1.0 + a) + a * de + ep) + q;
    const double t = (j - 1.0 + al) * (j - 1.0 + be);
    return (s * cj - t * cjm1) / r;
  }
};

double tail_estimate(double last, double prev, double ratio_floor) {
  double r = ratio_floor;
  if (prev > 0.0) r = std::fmax(r, last / prev);
  if (r >= 1.0) r = 0.999;
  return last * r / (1.0 - r);
}

}  // namespace

double heun_safe_radius(const HeunParams& p) { return 0.9 * p.radius(); }

SeriesExpansion heun_series_coeffs(const HeunParams& p, int n, double x_eval) {
  if (n < 0) throw ParameterError("series order must be nonnegative");
  SeriesExpansion s;
  s.radius = p.radius();
  s.coeffs.assign(static_cast<std::size_t>(n) + 1, 0.0);
  s.coeffs[0] = 1.0;
  if (n >= 1) s.coeffs[1] = p.q() / (p.a() * p.gamma());
  const Recurrence rec(p);
  for (int j = 1; j < n; ++j) s.coeffs[j + 1] = rec.next(j, s.coeffs[j], s.coeffs[j - 1]);
  const double ax = std::fabs(x_eval);
  if (ax > 0.0 && n >= 1) {
    const double last = std::fabs(s.coeffs[n]) * std::pow(ax, n);
    const double prev = std::fabs(s.coeffs[n - 1]) * std::pow(ax, n - 1);
    s.truncation_bound = tail_estimate(last, prev, ax / s.radius);
  }
  return s;
}

HeunEval heun_l_eval(const HeunParams& p, double x) {
  const double lim = heun_safe_radius(p);
  if (!(std::fabs(x) <= lim))
    throw DomainError("heun_l: |x| = " + std::to_string(std::fabs(x)) +
                      " outside the series disk |x| <= " + std::to_string(lim));
  const Recurrence rec(p);
  CompensatedSum s0, s1, s2;
  double abs_sum = 1.0;
  s0.add(1.0);

  double cm1 = 1.0;                              // c_{k-1}
  double ck = p.q() / (p.a() * p.gamma());       // c_k
  double xk = x;                                 // x^k
  double xkm1 = 1.0;                             // x^(k-1)
  double xkm2 = 0.0;                             // x^(k-2)
  int quiet = 0;
  double last_t0 = 0.0, prev_t0 = 1.0;
  int k = 1;
  for (;; ++k) {
    if (k > kMaxTerms)
      throw ConvergenceError("heun_l: series did not settle within 10000 terms", s0.value(),
                             std::fabs(last_t0));
    const double t0 = ck * xk;
    const double t1 = k * ck * xkm1;
    const double t2 = k >= 2 ? static_cast<double>(k) * (k - 1) * ck * xkm2 : 0.0;
    s0.add(t0);
    s1.add(t1);
    s2.add(t2);
    abs_sum += std::fabs(t0);
    prev_t0 = last_t0;
    last_t0 = std::fabs(t0);

    const double v0 = std::fabs(s0.value());
    const double v1 = std::fmax(std::fabs(s1.value()), v0);
    const double v2 = std::fmax(std::fabs(s2.value()), v1);
    const bool small = std::fabs(t0) < kStopRel * v0 && std::fabs(t1) < kStopRel * v1 &&
                       std::fabs(t2) < kStopRel * v2;
    quiet = small ? quiet + 1 : 0;
    if (quiet >= kStopRun) break;

    const double cn = rec.next(k, ck, cm1);
    cm1 = ck;
    ck = cn;
    xkm2 = xkm1;
    xkm1 = xk;
    xk *= x;
  }
  HeunEval e;
  e.jet = {s0.value(), s1.value(), s2.value()};
  e.abs_sum = abs_sum;
  e.terms = k + 1;
  e.tail_bound = std::fmax(tail_estimate(last_t0, prev_t0, std::fabs(x) / p.radius()),
                           100.0 * kEps * abs_sum);
  return e;
}

double heun_l(const HeunParams& p, double x) { return heun_l_eval(p, x).jet.value; }
double heun_l_prime(const HeunParams& p, double x) { return heun_l_eval(p, x).jet.d1; }
Jet heun_l_jet(const HeunParams& p, double x) { return heun_l_eval(p, x).jet; }

Dual heun_l(const HeunParams& p, const Dual& x) { return lift(heun_l_jet(p, x.v), x); }
Dual heun_l_prime(const HeunParams& p, const Dual& x) { return lift_slope(heun_l_jet(p, x.v), x); }
Jet heun_l(const HeunParams& p, const Jet& x) { return compose(heun_l_jet(p, x.value), x); }

}  // namespace heunref
