// Products of Heun functions: h a solution of h'' + Q h = 0 (transformed
// Heun, q = 0 hypergeometric, and the gamma = delta = eps = 0 reading), and
// the conjugate-equation entry with complete elliptic integrals.

#include <cmath>

#include "entry_support.hpp"
#include "heunref/lagrange/coefficients.hpp"
#include "heunref/lagrange/h_builders.hpp"
#include "heunref/specfun/elliptic.hpp"
#include "heunref/specfun/heun_series.hpp"
#include "heunref/verifier/heun_function.hpp"

namespace heunref::detail {

namespace {

std::vector<ParamRange> heunhh_ranges() {
  return {range_a(), range_q(), range_exp("alpha"), range("beta", -1.5, 0.1), range_exp("gamma"), range_exp("delta")};
}

Exclusion rho_exclusion(const ParamSet& ps) {
  const double disc = 1.0 - 4.0 * get(ps, "alpha") * get(ps, "beta");
  if (disc < 0.05) return "1 - 4 alpha beta near or below 0";
  if (near_any(std::sqrt(disc), {1.0, 2.0, 3.0, 4.0}, 0.05)) return "rho near an integer";
  return std::nullopt;
}

Eq4Form eq4_form(const std::string& variant) {
  if (variant == "alt-grouping") return Eq4Form::PrintedAltGrouping;
  if (variant == "derived-q1" || variant == "derived-q2" || variant == "derived-h2") return Eq4Form::Derived;
  return Eq4Form::Printed;
}

// The shared frame: integrand f/(x(x-1)(x-a)) K h' y, antiderivative f (h' y - h y').
template <class H>
ConcreteIdentity heunhh_frame(const HeunParams& p, H h, HeunFunction y) {
  ConcreteIdentity ci;
  ci.integrand = [=](double x) {
    return weight_shifted(p, x, -1, -1, -1) * heun_K(p, x) * h.slope_at(x) * y.value(x);
  };
  ci.antiderivative = [=](const Dual& x) {
    return weight_shifted(p, x, 0, 0, 0) * (h.slope_at(x) * y.at(x) - h.at(x) * y.slope_at(x));
  };
  return ci;
}

Identity heunhh(int i) {
  Identity e;
  e.id = "ID-HEUNHH-" + std::to_string(i);
  e.anchor = "products of H_l with h_" + std::to_string(i) +
             " = x^(-alpha_i) (x-a) H_l(1/a, q_i; alpha_i, beta_i, gamma_i, 0; 1/x) solving h'' + Q h = 0";
  e.constraints = "1 - 4 alpha beta > 0; x in [-3a, -1.25a] so that 1/x is inside the disk of H_l(1/a, ...)";
  e.free_params = heunhh_ranges();
  e.variants = i == 1 ? std::vector<std::string>{"printed", "derived-q1"}
                      : std::vector<std::string>{"printed", "alt-grouping", "derived-q2"};
  e.complete = [](const ParamSet& ps) {
    const HeunParams p = heun_params_of(ps);
    require(1.0 - 4.0 * p.alpha() * p.beta() > 0.0, "1 - 4 alpha beta > 0");
    return with_heun(ps, p);
  };
  e.exclude = [i](const ParamSet& ps) -> Exclusion {
    if (auto r = rho_exclusion(ps)) return r;
    const HeunParams p = heun_params_of(ps);
    for (Eq4Form f : {Eq4Form::Derived, Eq4Form::Printed, Eq4Form::PrintedAltGrouping}) {
      const double g = eq4_constants(p, i, f).gamma_i;
      if (g < 0.05 && std::fabs(g - std::round(g)) < 0.05) return "gamma_i near a nonpositive integer";
    }
    return std::nullopt;
  };
  e.default_interval = [](const ParamSet& ps) {
    const double a = get(ps, "a");
    require(a > 1.0, "a > 1");
    return Interval{-3.0 * a, -1.25 * a};
  };
  e.build = [i](const ParamSet& ps, const std::string& variant) {
    const HeunParams p = heun_params_of(ps);
    const double a = p.a();
    const HChoice h = build_h_eq4(p, i, false, eq4_form(variant), DerivativeSource::Closed);
    return heunhh_frame(p, h, HeunFunction::anchored(p, -3.0 * a, -1.25 * a));
  };
  return e;
}

Identity heunhh_q0(int i) {
  Identity e;
  e.id = "ID-HEUNHH-Q0-" + std::to_string(i);
  e.anchor = "products of H_l(a, 0; ...) with the q = 0 hypergeometric solution h_" + std::to_string(i) +
             " = (x-a)(x-1)^(-s) 2F1(.; (a-1)/(x-1))";
  e.constraints = "q = 0, 1 - 4 alpha beta > 0";
  e.free_params = heunhh_ranges();
  e.free_params.erase(e.free_params.begin() + 1);  // q is fixed
  if (i == 2) e.variants = {"printed", "derived-h2"};
  e.complete = [](const ParamSet& ps) {
    ParamSet in = ps;
    if (in.count("q")) require(in.at("q") == 0.0, "q = 0");
    in["q"] = 0.0;
    const HeunParams p = heun_params_of(in);
    require(1.0 - 4.0 * p.alpha() * p.beta() > 0.0, "1 - 4 alpha beta > 0");
    return with_heun(in, p);
  };
  e.exclude = rho_exclusion;
  e.default_interval = [](const ParamSet& ps) {
    const HeunParams p = heun_params_of(ps);
    const double hi = std::min(series_interval(p).hi, 1.0 - (p.a() - 1.0) / 8.0);
    if (!(p.a() > 1.0) || hi - 0.08 < 0.1) throw IntervalError("no room for (a-1)/(x-1) inside the 2F1 domain");
    return Interval{0.08, hi};
  };
  e.build = [i](const ParamSet& ps, const std::string& variant) {
    const HeunParams p = heun_params_of(ps);
    const HChoice h = build_h_eq4(p, i, true, eq4_form(variant), DerivativeSource::Closed);
    return heunhh_frame(p, h, HeunFunction::series(p));
  };
  return e;
}

// h is the origin-analytic solution of h'' + Q h = 0 read as a Heun equation
// with gamma = delta = eps = 0: x H_l(a, q; alpha+1, -alpha, 2, 0; x).
struct DegenH {
  HeunParams hp;
  Jet jet(const Jet& x) const { return x * heun_l(hp, x); }
  double at(double x) const { return jet(Jet::variable(x)).value; }
  double slope_at(double x) const { return jet(Jet::variable(x)).d1; }
  Dual at(const Dual& x) const { return lift(jet(Jet::variable(x.v)), x); }
  Dual slope_at(const Dual& x) const { return lift_slope(jet(Jet::variable(x.v)), x); }
};

Identity heunhh_degen() {
  Identity e;
  e.id = "ID-HEUNHH-DEGEN";
  e.anchor = "products of H_l with h = x H_l(a, q; alpha+1, -alpha, 2, 0; x) solving h'' + Q h = 0, beta = -1-alpha";
  e.constraints = "beta = -1 - alpha";
  e.free_params = {range_a(), range_q(), range_exp("alpha"), range_exp("gamma"), range_exp("delta")};
  e.complete = [](const ParamSet& ps) {
    const double al = get(ps, "alpha");
    return with_heun(ps, HeunParams(get(ps, "a"), get(ps, "q"), al, -1.0 - al, get(ps, "gamma"), get(ps, "delta")));
  };
  e.default_interval = plain_interval;
  e.build = [](const ParamSet& ps, const std::string&) {
    const HeunParams p = heun_params_of(ps);
    const DegenH h{HeunParams(p.a(), p.q(), p.alpha() + 1.0, -p.alpha(), 2.0, 0.0)};
    return heunhh_frame(p, h, HeunFunction::series(p));
  };
  return e;
}

enum class ElleH { Printed, Modulus, Complement };

Identity elle() {
  Identity e;
  e.id = "ID-ELLE";
  e.anchor = "H_l with gamma = 1, delta = eps = 0 written as (x-1)^alpha psi(x), paired with h'' + h'/x + h/(1-x^2) = 0";
  e.constraints = "a = 2, beta = -alpha, gamma = 1, delta = 0; 0 < alpha < 1/2";
  e.free_params = {range_q(), range("alpha", 0.1, 0.45)};
  e.variants = {"printed", "h=E(x)", "h=E(x')-K(x')"};
  e.complete = [](const ParamSet& ps) {
    const double al = get(ps, "alpha");
    if (ps.count("a")) require(ps.at("a") == 2.0, "a = 2");
    require(al > 0.0 && al < 0.5, "0 < alpha < 1/2");
    return with_heun(ps, HeunParams(2.0, get(ps, "q"), al, -al, 1.0, 0.0));
  };
  e.default_interval = [](const ParamSet&) { return Interval{-0.85, -0.2}; };
  e.build = [](const ParamSet& ps, const std::string& variant) {
    const HeunParams p = heun_params_of(ps);
    const double a = p.a(), al = p.alpha(), q = p.q();
    const HeunParams pp(1.0 - a, al * al * (1.0 - a) - al - q, -al, 1.0 - al, 1.0 - 2.0 * al, 0.0);
    const ElleH kind = variant == "h=E(x)" ? ElleH::Modulus : variant == "printed" ? ElleH::Printed : ElleH::Complement;
    auto psi = [pp, a](double x) {
      const Jet X = Jet::variable(x);
      return heun_l(pp, (1.0 - a) / (1.0 - X));
    };
    auto h_of = [kind](const auto& x) {
      const auto xc = sqrt(1.0 - x * x);
      switch (kind) {
        case ElleH::Printed: return ellip_e(xc);
        case ElleH::Modulus: return ellip_e(abs(x));
        case ElleH::Complement: return ellip_e(xc) - ellip_k(xc);
      }
      return xc;
    };
    ConcreteIdentity ci;
    ci.integrand = [=](double x) {
      const double Q = (1.0 - al * al) * x * x - (a + q + al * al) * x - q;
      const double h = h_of(Dual(x)).v;
      return ppow(x - 1.0, al, -1) * Q / ((x + 1.0) * (x - a)) * h * psi(x).value;
    };
    ci.antiderivative = [=](const Dual& x) {
      const Jet pj = psi(x.v);
      const Dual ps_ = lift(pj, x), ps1 = lift_slope(pj, x);
      const Dual pw = x * ppow(x - 1.0, al);
      const Dual xc = sqrt(1.0 - x * x);
      switch (kind) {
        case ElleH::Printed: {
          const Dual E = ellip_e(xc), K = ellip_k(xc);
          return pw * (((1.0 - al) * x - al) / (x * x - 1.0) * E * ps_ - x / (x * x - 1.0) * K * ps_ - E * ps1);
        }
        case ElleH::Modulus: {
          const Dual E = ellip_e(abs(x)), K = ellip_k(abs(x));
          return pw * ((E - K) / x * ps_ - al * E * ps_ / (x - 1.0) - E * ps1);
        }
        case ElleH::Complement: {
          const Dual E = ellip_e(xc), hc = E - ellip_k(xc);
          return pw * (E / x * ps_ - al * hc * ps_ / (x - 1.0) - hc * ps1);
        }
      }
      return x;
    };
    return ci;
  };
  return e;
}

}  // namespace

void add_product_entries(std::vector<Identity>& out) {
  out.push_back(heunhh(1));
  out.push_back(heunhh(2));
  out.push_back(heunhh_q0(1));
  out.push_back(heunhh_q0(2));
  out.push_back(heunhh_degen());
  out.push_back(elle());
}

}  // namespace heunref::detail
