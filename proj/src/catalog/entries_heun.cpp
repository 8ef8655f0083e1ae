// Entries whose only special function besides H_l is elementary, 2F1 or F:
// the elementary-h pair, the constant-h family, the elliptic-h entry, the
// two hypergeometric-h entries, the P h' + Q h = 0 entry and the conjugate pair.

#include <cmath>

#include "entry_support.hpp"
#include "heunref/lagrange/coefficients.hpp"
#include "heunref/lagrange/h_builders.hpp"
#include "heunref/specfun/elliptic.hpp"
#include "heunref/specfun/hyp2f1.hpp"
#include "heunref/verifier/heun_function.hpp"

namespace heunref::detail {

namespace {

ParamSet complete_plain(const ParamSet& ps) { return with_heun(ps, heun_params_of(ps)); }

struct Heun2Coeffs {
  double a0, a1, a2, b0, b1, b2, b3, b4, c0, c1, c2;
};

Heun2Coeffs heun2_coeffs(const HeunParams& p, int m, int ell, double k, bool corrected) {
  const double a = p.a(), al = p.alpha(), be = p.beta(), g = p.gamma(), d = p.delta(), q = p.q();
  Heun2Coeffs c{};
  c.a2 = al + be + 2.0 * m + 1.0;
  c.a0 = a * (g + 2.0 * m);
  c.a1 = (corrected ? -c.a2 : c.a2) + d * (1.0 - a) - c.a0;
  c.b4 = -k * k;
  c.b3 = k * k * (a + 1.0);
  c.b2 = -a * k * k + al * be + m * (al + be + m);
  c.b0 = a * m * (m + g - 1.0);
  c.b1 = m * (d * (1.0 - a) - al - be - m) - c.b0 - q;
  c.c2 = al + be + ell + 2.0 * m;
  c.c1 = d + a * (1.0 - g - d + (corrected ? -1.0 : 1.0) * (ell + 2.0 * m)) - c.c2;
  c.c0 = a * (ell + g + 2.0 * m - 1.0);
  return c;
}

Identity heun2(bool sin_branch) {
  Identity e;
  e.id = sin_branch ? "ID-HEUN2-SIN" : "ID-HEUN2-COS";
  e.anchor = sin_branch ? "Lagrangian identity with h = x^m exp(rho x^l) sin(k x)"
                        : "Lagrangian identity with h = x^m exp(rho x^l) cos(k x)";
  e.constraints = "m, l nonnegative integers; k1 = k2 = k";
  e.free_params = heun_ranges();
  e.free_params.push_back(choice("m", {0, 1, 2, 3}));
  e.free_params.push_back(range("rho", -1.0, 1.0));
  e.free_params.push_back(choice("ell", {1, 2, 3}));
  e.free_params.push_back(range("k", 0.2, 3.0));
  e.variants = {"printed", "corrected-a1-c1"};
  e.complete = [](const ParamSet& ps) {
    ParamSet out = complete_plain(ps);
    for (const char* key : {"m", "ell"}) {
      const double v = get(ps, key);
      require(v >= 0.0 && v == std::floor(v), std::string(key) + " is a nonnegative integer");
    }
    get(ps, "rho");
    get(ps, "k");
    return out;
  };
  e.default_interval = plain_interval;
  e.build = [sin_branch](const ParamSet& ps, const std::string& variant) {
    const HeunParams p = heun_params_of(ps);
    const int m = static_cast<int>(get(ps, "m")), ell = static_cast<int>(get(ps, "ell"));
    const double rho = get(ps, "rho"), k = get(ps, "k");
    const Heun2Coeffs c = heun2_coeffs(p, m, ell, k, variant == "corrected-a1-c1");
    const HeunFunction y = HeunFunction::series(p);
    const double a = p.a();
    ConcreteIdentity ci;
    ci.integrand = [=](double x) {
      const double xl = ipow(x, ell);
      const double p1 = k * (c.a0 + c.a1 * x + c.a2 * x * x) + 2.0 * k * rho * ell * xl * (x - 1.0) * (x - a);
      const double p2 = c.b0 + x * (c.b1 + x * (c.b2 + x * (c.b3 + x * c.b4))) +
                        rho * ell * xl * (c.c0 + c.c1 * x + c.c2 * x * x + rho * ell * xl * (x - 1.0) * (x - a));
      const double F = sin_branch ? x * p1 * std::cos(k * x) + p2 * std::sin(k * x)
                                  : p2 * std::cos(k * x) - x * p1 * std::sin(k * x);
      return weight_shifted(p, x, m - 2, -1, -1) * std::exp(rho * xl) * F * y.value(x);
    };
    ci.antiderivative = [=](const Dual& x) {
      const Dual H = y.at(x), H1 = y.slope_at(x);
      const Dual xl = ipow(x, ell);
      const Dual qf = (m + rho * ell * xl) * H - x * H1;
      const Dual br = sin_branch ? qf * sin(k * x) + k * x * cos(k * x) * H : qf * cos(k * x) - k * x * sin(k * x) * H;
      return weight_shifted(p, x, m - 1, 0, 0) * exp(rho * xl) * br;
    };
    return ci;
  };
  return e;
}

Identity f12() {
  Identity e;
  e.id = "ID-F12";
  e.anchor = "Lagrangian identity with constant h";
  e.constraints = "none beyond the Fuchsian condition";
  e.free_params = heun_ranges();
  e.complete = complete_plain;
  e.default_interval = plain_interval;
  e.build = [](const ParamSet& ps, const std::string&) {
    const HeunParams p = heun_params_of(ps);
    const HeunFunction y = HeunFunction::series(p);
    const double ab = p.alpha() * p.beta(), q = p.q();
    ConcreteIdentity ci;
    ci.integrand = [=](double x) { return weight_shifted(p, x, -1, -1, -1) * (ab * x - q) * y.value(x); };
    ci.antiderivative = [=](const Dual& x) { return -weight_shifted(p, x, 0, 0, 0) * y.slope_at(x); };
    return ci;
  };
  return e;
}

Identity hfe() {
  Identity e;
  e.id = "ID-HFE";
  e.anchor = "constant h = 1/(alpha(1-alpha)) integrating H_l alone";
  e.constraints = "q = alpha(1-alpha), beta = 1-alpha, gamma = epsilon = 1, delta = 0, alpha not in {0, 1}";
  e.free_params = {range_a(), range_exp("alpha")};
  e.complete = [](const ParamSet& ps) {
    const double al = get(ps, "alpha");
    require(al != 0.0 && al != 1.0, "alpha not in {0, 1}");
    return with_heun(ps, HeunParams(get(ps, "a"), al * (1.0 - al), al, 1.0 - al, 1.0, 0.0));
  };
  e.exclude = [](const ParamSet& ps) -> Exclusion {
    if (near_any(get(ps, "alpha"), {0.0, 1.0}, 0.05)) return "alpha near 0 or 1";
    return std::nullopt;
  };
  e.default_interval = plain_interval;
  e.build = [](const ParamSet& ps, const std::string&) {
    const HeunParams p = heun_params_of(ps);
    const HeunFunction y = HeunFunction::series(p);
    const double al = p.alpha(), a = p.a();
    ConcreteIdentity ci;
    ci.integrand = [=](double x) { return y.value(x); };
    ci.antiderivative = [=](const Dual& x) { return x * (a - x) / (al * (1.0 - al)) * y.slope_at(x); };
    return ci;
  };
  return e;
}

Identity hn() {
  Identity e;
  e.id = "ID-HN";
  e.anchor = "h solving h'' + P h' = 0 with gamma = delta = epsilon = 1/2 (incomplete elliptic F)";
  e.constraints = "alpha + beta = 1/2, gamma = delta = epsilon = 1/2, a > 1";
  e.free_params = {range_a(), range_q(), range_exp("alpha")};
  e.complete = [](const ParamSet& ps) {
    const double a = get(ps, "a"), al = get(ps, "alpha");
    require(a > 1.0, "a > 1 (real modulus 1/sqrt(a))");
    return with_heun(ps, HeunParams(a, get(ps, "q"), al, 0.5 - al, 0.5, 0.5));
  };
  e.default_interval = plain_interval;
  e.build = [](const ParamSet& ps, const std::string&) {
    const HeunParams p = heun_params_of(ps);
    const HeunFunction y = HeunFunction::series(p);
    const double a = p.a(), al = p.alpha(), q = p.q(), k = 1.0 / std::sqrt(a);
    ConcreteIdentity ci;
    ci.integrand = [=](double x) {
      const double r = std::sqrt(x * (x - 1.0) * (x - a));
      return (al * (1.0 - 2.0 * al) * x - 2.0 * q) / r * ellip_f(std::asin(std::sqrt(x)), k) * y.value(x);
    };
    ci.antiderivative = [=](const Dual& x) {
      const Dual r = sqrt(x * (x - 1.0) * (x - a));
      return std::sqrt(a) * y.at(x) - 2.0 * r * ellip_f(asin(sqrt(x)), k) * y.slope_at(x);
    };
    return ci;
  };
  return e;
}

// delta = 0 (auf1) or epsilon = 0 (auf2) with h = x^tau 2F1(., tau; 1+tau; .).
Identity auf(bool delta_zero) {
  Identity e;
  e.id = delta_zero ? "ID-AUF1" : "ID-AUF2";
  e.anchor = delta_zero ? "h solving h'' + P h' = 0 with delta = 0, h = x^tau 2F1(eps, tau; 1+tau; x/a)"
                        : "h solving h'' + P h' = 0 with epsilon = 0, h = x^tau 2F1(delta, tau; 1+tau; x)";
  e.constraints = delta_zero ? "delta = 0, tau = 1-gamma != 0, epsilon = alpha+beta+tau"
                             : "epsilon = 0, tau = 1-gamma != 0, delta = alpha+beta+tau";
  e.free_params = {range_a(), range_q(), range_exp("alpha"), range_exp("beta"), range_exp("gamma")};
  if (delta_zero) e.variants = {"printed", "2+tau"};
  e.complete = [delta_zero](const ParamSet& ps) {
    const double al = get(ps, "alpha"), be = get(ps, "beta"), g = get(ps, "gamma");
    const double tau = 1.0 - g;
    require(tau != 0.0, "tau = 1 - gamma != 0");
    require(!is_nonpositive_integer(1.0 + tau), "1 + tau not a nonpositive integer");
    const double d = delta_zero ? 0.0 : al + be + tau;
    return with_heun(ps, HeunParams(get(ps, "a"), get(ps, "q"), al, be, g, d));
  };
  e.exclude = [](const ParamSet& ps) -> Exclusion {
    if (near_any(get(ps, "gamma"), {1.0, 2.0}, 0.05)) return "gamma near 1 or 2";
    return std::nullopt;
  };
  e.default_interval = plain_interval;
  e.build = [delta_zero](const ParamSet& ps, const std::string& variant) {
    const HeunParams p = heun_params_of(ps);
    const HeunFunction y = HeunFunction::series(p);
    const double a = p.a(), ab = p.alpha() * p.beta(), q = p.q(), tau = 1.0 - p.gamma();
    // e: the exponent carried by the weight; s: argument scale of 2F1.
    const double ex = delta_zero ? p.epsilon() : p.delta();
    const double base = delta_zero ? a : 1.0;   // (x - base)^ex in the weight
    const double other = delta_zero ? 1.0 : a;  // the other linear factor
    const double s = delta_zero ? 1.0 / a : 1.0;
    const double c_shift = delta_zero ? (variant == "2+tau" ? 2.0 + tau : 2.0 - tau) : 2.0 + tau;
    ConcreteIdentity ci;
    ci.integrand = [=](double x) {
      return ppow(x - base, ex, -1) * (ab * x - q) / (x - other) * hyp2f1(ex, tau, 1.0 + tau, s * x) * y.value(x);
    };
    ci.antiderivative = [=](const Dual& x) {
      const Dual F = hyp2f1(ex, tau, 1.0 + tau, s * x);
      const Dual G = hyp2f1(ex + 1.0, 1.0 + tau, c_shift, s * x);
      return ppow(x - base, ex, 0) * (tau * (F + ex * s * x / (1.0 + tau) * G) * y.at(x) - x * F * y.slope_at(x));
    };
    return ci;
  };
  return e;
}

Identity hh1() {
  Identity e;
  e.id = "ID-HH1";
  e.anchor = "h solving P h' + Q h = 0";
  e.constraints = "h from the sign of Delta = k0 k2 - k1^2/4; interval clear of the real roots of K";
  e.free_params = heun_ranges();
  e.complete = complete_plain;
  e.default_interval = [](const ParamSet& ps) {
    const HeunParams p = heun_params_of(ps);
    const Interval base = series_interval(p);
    return carve_interval(base.lo, base.hi, build_h_eq3(p).extra_singularities, 0.05);
  };
  e.build = [](const ParamSet& ps, const std::string&) {
    const HeunParams p = heun_params_of(ps);
    const HeunFunction y = HeunFunction::series(p);
    const HChoice h = build_h_eq3(p, DerivativeSource::Closed);
    ConcreteIdentity ci;
    ci.integrand = [=](double x) {
      const Dual xd = Dual::variable(x);
      const Dual P = heun_P(p, xd), Q = heun_Q(p, xd);
      const double w = Q.v * P.d - P.v * Q.d;
      return weight_shifted(p, x, 0, 0, 0) * h.h_at(x) * (Q.v * Q.v + w) / (P.v * P.v) * y.value(x);
    };
    ci.antiderivative = [=](const Dual& x) {
      return -weight_shifted(p, x, 0, 0, 0) * h.at(x) * (heun_Q(p, x) / heun_P(p, x) * y.at(x) + y.slope_at(x));
    };
    return ci;
  };
  return e;
}

Identity conj() {
  Identity e;
  e.id = "ID-CONJ";
  e.anchor = "conjugate pair H_l(a, q) and H_l(a, -q), Qbar = (ab x + q)/(x(x-1)(x-a))";
  e.constraints = "q != 0";
  e.free_params = heun_ranges();
  e.complete = [](const ParamSet& ps) {
    require(get(ps, "q") != 0.0, "q != 0");
    return complete_plain(ps);
  };
  e.exclude = [](const ParamSet& ps) -> Exclusion {
    if (std::fabs(get(ps, "q")) < 0.05) return "q near 0";
    return std::nullopt;
  };
  e.default_interval = plain_interval;
  e.build = [](const ParamSet& ps, const std::string&) {
    const HeunParams p = heun_params_of(ps);
    const HeunFunction y = HeunFunction::series(p);
    const HeunFunction ym = HeunFunction::series(p.with_q(-p.q()));
    const double q = p.q();
    ConcreteIdentity ci;
    ci.integrand = [=](double x) { return weight_shifted(p, x, -1, -1, -1) * y.value(x) * ym.value(x); };
    ci.antiderivative = [=](const Dual& x) {
      const Dual w = ym.at(x) * y.slope_at(x) - ym.slope_at(x) * y.at(x);
      return weight_shifted(p, x, 0, 0, 0) / (2.0 * q) * w;
    };
    return ci;
  };
  return e;
}

}  // namespace

void add_heun_entries(std::vector<Identity>& out) {
  out.push_back(heun2(true));
  out.push_back(heun2(false));
  out.push_back(f12());
  out.push_back(hfe());
  out.push_back(hn());
  out.push_back(auf(true));
  out.push_back(auf(false));
  out.push_back(hh1());
  out.push_back(conj());
}

}  // namespace heunref::detail
