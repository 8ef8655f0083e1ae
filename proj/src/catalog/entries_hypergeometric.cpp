// Entries stated in the hypergeometric variable z, and the three
// change-of-variable readings of the classical table formula.

#include <cmath>
#include <numbers>

#include "entry_support.hpp"
#include "heunref/catalog/reductions.hpp"
#include "heunref/specfun/elliptic.hpp"
#include "heunref/specfun/hyp2f1.hpp"
#include "heunref/verifier/heun_function.hpp"

namespace heunref::detail {

namespace {

constexpr Interval kZInterval{0.08, 0.85};

Interval z_interval(const ParamSet&) { return kZInterval; }

void require_c(double c) { require(!is_nonpositive_integer(c) && !is_nonpositive_integer(c + 1.0), "c, c+1 not nonpositive integers"); }

Identity laut() {
  Identity e;
  e.id = "ID-LAUT";
  e.anchor = "2F1(a, 1/4-a; 1/2; z) times F(psi(z), 1/sqrt 2), from the elliptic-h entry under z = x(2-x)";
  e.constraints = "a not in {0, 1/4}";
  e.free_params = {range("a", 0.1, 1.25)};
  e.complete = [](const ParamSet& ps) {
    const double a = get(ps, "a");
    require(a != 0.0 && a != 0.25, "a not in {0, 1/4}");
    return ps;
  };
  e.exclude = [](const ParamSet& ps) -> Exclusion {
    if (near_any(get(ps, "a"), {0.0, 0.25}, 0.05)) return "a near 0 or 1/4";
    return std::nullopt;
  };
  e.default_interval = z_interval;
  e.build = [](const ParamSet& ps, const std::string&) {
    const double a = get(ps, "a");
    const double k = 1.0 / std::numbers::sqrt2;
    ConcreteIdentity ci;
    ci.integrand = [=](double z) {
      const double psi = std::asin(std::sqrt(1.0 - std::sqrt(1.0 - z)));
      return std::pow(z, -0.5) * std::pow(1.0 - z, -0.25) * ellip_f(psi, k) * hyp2f1(a, 0.25 - a, 0.5, z);
    };
    ci.antiderivative = [=](const Dual& z) {
      const Dual psi = asin(sqrt(1.0 - sqrt(1.0 - z)));
      return std::numbers::sqrt2 / (a * (4.0 * a - 1.0)) * hyp2f1(a, 0.25 - a, 0.5, z) +
             2.0 * pow(z, 0.5) * pow(1.0 - z, 0.75) * ellip_f(psi, k) * hyp2f1(a + 1.0, 1.25 - a, 1.5, z);
    };
    return ci;
  };
  return e;
}

Identity prudf() {
  Identity e;
  e.id = "ID-PRUDF";
  e.anchor = "z^(c-1) (1-z)^(a+b-c) 2F1(a, b; c; z), the classical table formula";
  e.constraints = "c not a nonpositive integer";
  e.status = StatusNote::Known;
  e.free_params = {range("a", 0.1, 1.25), range("b", 0.1, 1.25), range("c", 0.2, 2.5)};
  e.complete = [](const ParamSet& ps) {
    require_c(get(ps, "c"));
    get(ps, "a");
    get(ps, "b");
    return ps;
  };
  e.default_interval = z_interval;
  e.build = [](const ParamSet& ps, const std::string&) {
    const double a = get(ps, "a"), b = get(ps, "b"), c = get(ps, "c");
    ConcreteIdentity ci;
    ci.integrand = [=](double z) { return std::pow(z, c - 1.0) * std::pow(1.0 - z, a + b - c) * hyp2f1(a, b, c, z); };
    ci.antiderivative = [=](const Dual& z) {
      return pow(z, c) / c * pow(1.0 - z, a + b - c + 1.0) * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z);
    };
    return ci;
  };
  return e;
}

// The table formula evaluated through H_l: 2F1(a, b; c; z) = H_l(x(z)) and
// 2F1(a+1, b+1; c+1; z) = H_l'(x(z)) / pre(x(z)).
Identity prudf_mapped(Reduction r) {
  Identity e;
  switch (r) {
    case Reduction::L1:
      e.id = "ID-PRUDF-H";
      e.anchor = "table formula through H_l(2, ab; al, be, g, al+be-2g+1; x), z = x(2-x)";
      e.constraints = "a = 2, q = alpha beta, delta = alpha+beta-2 gamma+1; x = 1 - sqrt(1-z)";
      break;
    case Reduction::L2:
      e.id = "ID-PRUDF-F";
      e.anchor = "table formula through H_l(4, ab; al, be, 1/2, 2(al+be)/3; x), z = x(x-3)^2/4";
      e.constraints = "a = 4, q = alpha beta, gamma = 1/2, delta = 2(alpha+beta)/3; x the root in (0, 1)";
      break;
    case Reduction::L3:
      e.id = "ID-PRUDF-G";
      e.anchor = "table formula through H_l(2, ab; al, be, (al+be+2)/4, (al+be)/2; x), z = -4x(x-1)^2(x-2)";
      e.constraints = "a = 2, q = alpha beta, gamma = (alpha+beta+2)/4, delta = (alpha+beta)/2; x = 1 - sqrt((1+sqrt(1-z))/2)";
      break;
  }
  e.status = StatusNote::Known;
  e.free_params = {range_exp("alpha"), range_exp("beta")};
  if (r == Reduction::L1) e.free_params.push_back(range_exp("gamma"));
  e.complete = [r](const ParamSet& ps) {
    const double g = r == Reduction::L1 ? get(ps, "gamma") : 1.0;
    const HeunParams p = specialize(r, get(ps, "alpha"), get(ps, "beta"), g);
    require_c(reduction_hyp_params(r, p).c);
    return with_heun(ps, p);
  };
  e.default_interval = z_interval;
  e.build = [r](const ParamSet& ps, const std::string&) {
    const HeunParams p = heun_params_of(ps);
    const HypParams hp = reduction_hyp_params(r, p);
    const HeunFunction y = HeunFunction::series(p);
    auto x_of = [r](const auto& z) {
      using std::acos, std::cos, std::sqrt;
      switch (r) {
        case Reduction::L1: return 1.0 - sqrt(1.0 - z);
        case Reduction::L2: return 2.0 + 2.0 * cos((acos(2.0 * z - 1.0) + 2.0 * std::numbers::pi) / 3.0);
        case Reduction::L3: return 1.0 - sqrt((1.0 + sqrt(1.0 - z)) / 2.0);
      }
      return z;
    };
    const double a = hp.a, b = hp.b, c = hp.c;
    ConcreteIdentity ci;
    ci.integrand = [=](double z) {
      return std::pow(z, c - 1.0) * std::pow(1.0 - z, a + b - c) * y.value(x_of(z));
    };
    ci.antiderivative = [=](const Dual& z) {
      const Dual x = x_of(z);
      const Dual shifted = y.slope_at(x) / reduction_prefactor(r, p, x);
      return pow(z, c) / c * pow(1.0 - z, a + b - c + 1.0) * shifted;
    };
    return ci;
  };
  return e;
}

Identity hhh1() {
  Identity e;
  e.id = "ID-HHH1";
  e.anchor = "P h' + Q h = 0 entry under a = 2, q = alpha beta, z = x(2-x)";
  e.constraints = "1 - c + 2(a+b+ab) != 0, 1 + 2(a+b) != 0, c != 0";
  e.free_params = {range("a", 0.1, 1.25), range("b", 0.1, 1.25), range("c", 0.2, 2.5)};
  e.complete = [](const ParamSet& ps) {
    const double a = get(ps, "a"), b = get(ps, "b"), c = get(ps, "c");
    require_c(c);
    require(1.0 - c + 2.0 * (a + b + a * b) != 0.0, "1 - c + 2(a+b+ab) != 0");
    require(1.0 + 2.0 * (a + b) != 0.0, "1 + 2(a+b) != 0");
    return ps;
  };
  e.exclude = [](const ParamSet& ps) -> Exclusion {
    const double a = get(ps, "a"), b = get(ps, "b"), c = get(ps, "c");
    if (std::fabs(1.0 - c + 2.0 * (a + b + a * b)) < 0.05) return "1 - c + 2(a+b+ab) near 0";
    return std::nullopt;
  };
  e.default_interval = [](const ParamSet& ps) {
    const double a = get(ps, "a"), b = get(ps, "b"), c = get(ps, "c");
    const double rho2 = (1.0 + 2.0 * (a + b)) / (2.0 * c);
    return carve_interval(kZInterval.lo, kZInterval.hi, {1.0 / rho2}, 0.05);
  };
  e.build = [](const ParamSet& ps, const std::string&) {
    const double a = get(ps, "a"), b = get(ps, "b"), c = get(ps, "c");
    const double rho1 = (1.0 + 2.0 * (a + b + 2.0 * a * b)) / (2.0 * (1.0 - c + 2.0 * (a + b + a * b)));
    const double rho2 = (1.0 + 2.0 * (a + b)) / (2.0 * c);
    const double rho3 = 2.0 * c / (2.0 * (a + b + a * b) - c + 1.0);
    const double omega = 2.0 * a * b / (1.0 + 2.0 * (a + b));
    ConcreteIdentity ci;
    ci.integrand = [=](double z) {
      return std::pow(z, c) * std::pow(1.0 - z, a + b - c) * (1.0 - rho1 * z) * ppow(1.0 - rho2 * z, -omega, -2) *
             hyp2f1(a, b, c, z);
    };
    ci.antiderivative = [=](const Dual& z) {
      const Dual u = 1.0 - rho2 * z;
      return rho3 * pow(z, c) * pow(1.0 - z, a + b + 1.0 - c) * ppow(u, -omega) *
             (hyp2f1(a, b, c, z) / u - hyp2f1(a + 1.0, b + 1.0, c + 1.0, z));
    };
    return ci;
  };
  return e;
}

Identity hhh1n() {
  Identity e;
  e.id = "ID-HHH1N";
  e.anchor = "Delta = 0 case gamma = (alpha+beta+1)/2 of the a = 2 reduction, z = x(2-x)";
  e.constraints = "c = a + b + 1/2";
  e.status = StatusNote::Known;
  e.free_params = {range("a", 0.1, 1.25), range("b", 0.1, 1.25)};
  e.complete = [](const ParamSet& ps) {
    ParamSet out = ps;
    out["c"] = get(ps, "a") + get(ps, "b") + 0.5;
    return out;
  };
  e.default_interval = z_interval;
  e.build = [](const ParamSet& ps, const std::string&) {
    const double a = get(ps, "a"), b = get(ps, "b"), c = get(ps, "c");
    const double lambda = 2.0 * (2.0 * a + 2.0 * b + 1.0) / (2.0 * (2.0 * a * b + a + b) + 1.0);
    const double xi = 2.0 * a * b / (2.0 * a + 2.0 * b + 1.0);
    ConcreteIdentity ci;
    ci.integrand = [=](double z) { return std::pow(z, c) * std::pow(1.0 - z, -1.5 - xi) * hyp2f1(a, b, c, z); };
    ci.antiderivative = [=](const Dual& z) {
      const Dual s = sqrt(1.0 - z);
      return lambda * pow(z, c) * pow(1.0 - z, -xi) *
             (hyp2f1(a, b, c, z) / s - s * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z));
    };
    return ci;
  };
  return e;
}

Identity hhh1nt() {
  Identity e;
  e.id = "ID-HHH1NT";
  e.anchor = "Delta = 0 case alpha = -beta-1 of the a = 2 reduction, z = x(2-x)";
  e.constraints = "b(2b+1) + c != 0, c != 0";
  e.free_params = {range("b", 0.1, 1.25), range("c", 0.2, 2.5)};
  e.complete = [](const ParamSet& ps) {
    const double b = get(ps, "b"), c = get(ps, "c");
    require_c(c);
    require(b * (2.0 * b + 1.0) + c != 0.0, "b(2b+1) + c != 0");
    return ps;
  };
  e.default_interval = z_interval;
  e.build = [](const ParamSet& ps, const std::string&) {
    const double b = get(ps, "b"), c = get(ps, "c");
    const double bb = b * (2.0 * b + 1.0);
    const double lambda1 = 2.0 * c / (bb + c), p1 = bb / (bb + c), p2 = bb / (2.0 * c);
    ConcreteIdentity ci;
    ci.integrand = [=](double z) {
      return std::pow(z, c) * std::pow(1.0 - z, -c - 0.5) * (1.0 - p1 * z) * std::exp(-p2 * z) *
             hyp2f1(-b - 0.5, b, c, z);
    };
    ci.antiderivative = [=](const Dual& z) {
      return lambda1 * pow(z, c) * pow(1.0 - z, 0.5 - c) * exp(-p2 * z) *
             (hyp2f1(-b + 0.5, b + 1.0, c + 1.0, z) - hyp2f1(-b - 0.5, b, c, z));
    };
    return ci;
  };
  return e;
}

}  // namespace

void add_hypergeometric_entries(std::vector<Identity>& out) {
  out.push_back(laut());
  out.push_back(prudf());
  out.push_back(prudf_mapped(Reduction::L1));
  out.push_back(prudf_mapped(Reduction::L2));
  out.push_back(prudf_mapped(Reduction::L3));
  out.push_back(hhh1());
  out.push_back(hhh1n());
  out.push_back(hhh1nt());
}

}  // namespace heunref::detail
