#include "heunref/lagrange/h_builders.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "heunref/errors.hpp"
#include "heunref/lagrange/coefficients.hpp"
#include "heunref/specfun/elliptic.hpp"
#include "heunref/specfun/heun_series.hpp"
#include "heunref/specfun/hyp2f1.hpp"

namespace heunref {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

Jet ipow(const Jet& x, int n) {
  Jet r(1.0);
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

bool near(double u, double v) { return std::fabs(u - v) <= 1e-12 * std::fmax(1.0, std::fabs(v)); }

}  // namespace

const char* to_string(HMethod m) {
  switch (m) {
    case HMethod::Elementary: return "ELEMENTARY";
    case HMethod::Eq2: return "EQ2";
    case HMethod::Eq3: return "EQ3";
    case HMethod::Eq4: return "EQ4";
    case HMethod::Conjugate: return "CONJUGATE";
    case HMethod::Constant: return "CONSTANT";
  }
  return "?";
}

HChoice build_h_elementary(int m, double rho, int ell, double k, ElementaryBranch branch) {
  if (m < 0 || ell < 0) throw ParameterError("elementary h needs m, ell >= 0");
  HChoice h;
  const bool constant = m == 0 && (rho == 0.0 || ell == 0) && branch == ElementaryBranch::None;
  h.method = constant ? HMethod::Constant : HMethod::Elementary;
  h.label = "x^" + std::to_string(m) + " exp(rho x^" + std::to_string(ell) + ")" +
            (branch == ElementaryBranch::Sin ? " sin(kx)" : branch == ElementaryBranch::Cos ? " cos(kx)" : "");
  h.jet = [=](double xv) {
    const Jet x = Jet::variable(xv);
    Jet v = ipow(x, m) * exp(rho * ipow(x, ell));
    if (branch == ElementaryBranch::Sin) v = v * sin(k * x);
    if (branch == ElementaryBranch::Cos) v = v * cos(k * x);
    return v;
  };
  return h;
}

HChoice build_h_eq2(const HeunParams& p, Eq2Variant variant, DerivativeSource src) {
  HChoice h;
  h.method = HMethod::Eq2;
  const double a = p.a(), tau = 1.0 - p.gamma();
  switch (variant) {
    case Eq2Variant::Elliptic: {
      if (!(near(p.gamma(), 0.5) && near(p.delta(), 0.5) && near(p.epsilon(), 0.5)))
        throw ParameterError("elliptic h needs gamma = delta = epsilon = 1/2 (alpha + beta = 1/2)");
      if (!(a > 1.0)) throw ParameterError("elliptic h needs a > 1 for a real modulus 1/sqrt(a)");
      h.label = "(2/sqrt a) F(arcsin sqrt x, 1/sqrt a)";
      h.extra_singularities = {};
      const double k = 1.0 / std::sqrt(a);
      h.jet = [=](double xv) {
        if (!(xv > 0.0 && xv < 1.0)) throw DomainError("elliptic h is defined for 0 < x < 1");
        const Jet x = Jet::variable(xv);
        if (src == DerivativeSource::Closed) return 2.0 * k * ellip_f(asin(sqrt(x)), k);
        const double h0 = 2.0 * k * ellip_f(std::asin(std::sqrt(xv)), k);
        const double h1 = 1.0 / std::sqrt(xv * (1.0 - xv) * (a - xv));
        return Jet{h0, h1, -heun_P(p, xv) * h1};
      };
      break;
    }
    case Eq2Variant::Delta0:
    case Eq2Variant::Eps0: {
      const bool d0 = variant == Eq2Variant::Delta0;
      if (d0 && p.delta() != 0.0) throw ParameterError("this h needs delta = 0");
      if (!d0 && p.epsilon() != 0.0) throw ParameterError("this h needs epsilon = 0");
      if (tau == 0.0) throw ParameterError("tau = 1 - gamma = 0 makes h constant; excluded");
      if (is_nonpositive_integer(1.0 + tau)) throw ParameterError("2 - gamma is a nonpositive integer");
      const double e = d0 ? p.epsilon() : p.delta();
      const double s = d0 ? 1.0 / a : 1.0;  // argument scale
      h.label = d0 ? "x^tau 2F1(eps, tau; 1+tau; x/a)" : "x^tau 2F1(delta, tau; 1+tau; x)";
      h.jet = [=](double xv) {
        if (!(xv > 0.0)) throw DomainError("x^tau needs x > 0");
        const Jet x = Jet::variable(xv);
        if (src == DerivativeSource::Closed) return pow(x, tau) * hyp2f1(e, tau, 1.0 + tau, s * x);
        const double h0 = std::pow(xv, tau) * hyp2f1(e, tau, 1.0 + tau, s * xv);
        const double h1 = tau * std::pow(xv, tau - 1.0) * std::pow(1.0 - s * xv, -e);
        return Jet{h0, h1, -heun_P(p, xv) * h1};
      };
      break;
    }
  }
  return h;
}

DeltaDiscriminant delta_discriminant(const HeunParams& p) {
  DeltaDiscriminant d;
  d.k2 = p.alpha() + p.beta() + 1.0;
  d.k1 = -(p.a() * (p.gamma() + p.delta()) + p.alpha() + p.beta() + 1.0 - p.delta());
  d.k0 = p.a() * p.gamma();
  d.delta = d.k0 * d.k2 - 0.25 * d.k1 * d.k1;
  const double k2_scale = std::fabs(p.alpha()) + std::fabs(p.beta()) + 1.0;
  const double scale = std::fmax(std::fabs(d.k0 * d.k2), 0.25 * d.k1 * d.k1);
  if (std::fabs(d.k2) <= 64.0 * kEps * k2_scale)
    d.cls = DeltaClass::Degenerate;
  else if (std::fabs(d.delta) <= 64.0 * kEps * scale)
    d.cls = DeltaClass::Zero;
  else
    d.cls = d.delta > 0.0 ? DeltaClass::Positive : DeltaClass::Negative;
  return d;
}

HChoice build_h_eq3(const HeunParams& p, DerivativeSource src) {
  const DeltaDiscriminant dd = delta_discriminant(p);
  const double ab = p.alpha() * p.beta(), q = p.q();
  const double k0 = dd.k0, k1 = dd.k1, k2 = dd.k2;
  HChoice h;
  h.method = HMethod::Eq3;
  std::function<Jet(const Jet&)> closed;
  switch (dd.cls) {
    case DeltaClass::Positive: {
      const double sd = std::sqrt(dd.delta);
      const double e = -ab / (2.0 * k2);
      const double c = (ab * k1 + 2.0 * q * k2) / (2.0 * k2 * sd);
      h.label = "|K|^(-ab/2k2) exp(c atan(.))";
      closed = [=](const Jet& x) {
        const Jet K = (k2 * x + k1) * x + k0;
        return ppow(K, e) * exp(c * atan((2.0 * k2 * x + k1) / (2.0 * sd)));
      };
      break;
    }
    case DeltaClass::Zero: {
      const double x0 = -k1 / (2.0 * k2);
      const double C = (ab * x0 - q) / k2;
      const double e = -ab / k2;
      h.label = "|x-x0|^(-ab/k2) exp(C/(x-x0))";
      h.extra_singularities = {x0};
      closed = [=](const Jet& x) { return ppow(x - x0, e) * exp(C / (x - x0)); };
      break;
    }
    case DeltaClass::Negative: {
      const double sd = std::sqrt(-dd.delta);
      const double e = -ab / (2.0 * k2);
      const double c = (ab * k1 + 2.0 * q * k2) / (4.0 * k2 * sd);
      h.label = "|K|^(-ab/2k2) |ratio|^c";
      const double r1 = (-k1 - 2.0 * sd) / (2.0 * k2), r2 = (-k1 + 2.0 * sd) / (2.0 * k2);
      h.extra_singularities = {std::fmin(r1, r2), std::fmax(r1, r2)};
      closed = [=](const Jet& x) {
        const Jet K = (k2 * x + k1) * x + k0;
        const Jet u = 2.0 * k2 * x + k1;
        return ppow(K, e) * ppow((u - 2.0 * sd) / (u + 2.0 * sd), c);
      };
      break;
    }
    case DeltaClass::Degenerate: {
      if (k1 != 0.0) {
        const double e = (ab * k0 + q * k1) / (k1 * k1);
        h.label = "exp(-ab x/k1) |k1 x + k0|^e";
        h.extra_singularities = {-k0 / k1};
        closed = [=](const Jet& x) { return exp(-ab / k1 * x) * ppow(k1 * x + k0, e); };
      } else if (k0 != 0.0) {
        h.label = "exp(-(ab x^2/2 - q x)/k0)";
        closed = [=](const Jet& x) { return exp(-(0.5 * ab * x * x - q * x) / k0); };
      } else {
        throw ParameterError("P vanishes identically; P h' + Q h = 0 has no solution");
      }
      break;
    }
  }
  h.jet = [=](double xv) {
    const Jet x = Jet::variable(xv);
    const Jet hc = closed(x);
    if (src == DerivativeSource::Closed) return hc;
    // Q/P = (ab x - q)/K
    const Jet r = (ab * x - q) / ((k2 * x + k1) * x + k0);
    const double h1 = -r.value * hc.value;
    return Jet{hc.value, h1, hc.value * (r.value * r.value - r.d1)};
  };
  return h;
}

void require_clear(const HChoice& h, double lo, double hi, double margin) {
  for (double s : h.extra_singularities)
    if (s > lo - margin && s < hi + margin)
      throw IntervalError("singular point " + std::to_string(s) + " of h lies within " + std::to_string(margin) +
                          " of [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

Eq4Constants eq4_constants(const HeunParams& p, int i, Eq4Form form) {
  if (i != 1 && i != 2) throw ParameterError("solution index must be 1 or 2");
  const double ab = p.alpha() * p.beta(), q = p.q(), a = p.a();
  const double disc = 1.0 - 4.0 * ab;
  if (!(disc > 0.0)) throw ParameterError("1 - 4 alpha beta must be positive for a real rho");
  Eq4Constants c;
  c.rho = std::sqrt(disc);
  c.omega = 1.0 - ab;
  const double rho = c.rho, om = c.omega;
  if (i == 1) {
    c.alpha_i = (1.0 + rho) / 2.0;
    c.beta_i = c.alpha_i + 1.0;
    c.gamma_i = 2.0 * (om - ab + rho) / (1.0 + rho);
    c.q_i = (q - ab) / a + om + (form == Eq4Form::Derived ? rho : -rho);
  } else {
    c.alpha_i = 2.0 * ab / (1.0 + rho);
    c.beta_i = c.alpha_i + 1.0;
    c.gamma_i = 2.0 * c.alpha_i;
    const double lead = rho * (rho * rho * (q - ab) - ab * (4.0 * a * om + 3.0) + 3.0 * q);
    const double den = a * std::pow(1.0 + rho, 3);
    switch (form) {
      case Eq4Form::Derived: c.q_i = (q - ab) / a + om - rho; break;
      case Eq4Form::Printed: c.q_i = (lead - 4.0 * (ab * ab * (a - 3.0) + (3.0 * q - a + 1.0))) / den; break;
      case Eq4Form::PrintedAltGrouping:
        c.q_i = (lead - 4.0 * ab * ab * (a - 3.0) + (3.0 * q - a + 1.0)) / den;
        break;
    }
  }
  return c;
}

HChoice build_h_eq4(const HeunParams& p, int i, bool q_zero, Eq4Form form, DerivativeSource src) {
  if (i != 1 && i != 2) throw ParameterError("solution index must be 1 or 2");
  const double ab = p.alpha() * p.beta(), a = p.a();
  if (!(1.0 - 4.0 * ab > 0.0)) throw ParameterError("1 - 4 alpha beta must be positive for a real rho");
  const double rho = std::sqrt(1.0 - 4.0 * ab);
  const bool use_method = src == DerivativeSource::FromMethod && form == Eq4Form::Derived;
  HChoice h;
  h.method = HMethod::Eq4;
  std::function<Jet(const Jet&)> closed;
  if (!q_zero) {
    const Eq4Constants c = eq4_constants(p, i, form);
    const HeunParams inner(1.0 / a, c.q_i, c.alpha_i, c.beta_i, c.gamma_i, 0.0);
    h.label = "x^(-alpha_" + std::to_string(i) + ") (x-a) H_l(1/a, q_" + std::to_string(i) + "; ...; 1/x)";
    h.extra_singularities = {0.0};
    closed = [=](const Jet& x) { return ppow(x, -c.alpha_i) * (x - a) * heun_l(inner, 1.0 / x); };
  } else {
    if (p.q() != 0.0) throw ParameterError("the hypergeometric solutions need q = 0");
    const double a1 = (3.0 - rho) / 2.0, b1 = a1 - 1.0, a2 = (1.0 + rho) / 2.0;
    double s, fa, fb, fc;
    if (i == 1) {
      s = b1, fa = a1, fb = b1, fc = 2.0 * b1;
    } else if (form == Eq4Form::Derived) {
      s = a2, fa = a2, fb = a2 + 1.0, fc = 2.0 * a2;
    } else {
      s = a1, fa = a2, fb = a2 + 1.0, fc = 2.0 * a1;
    }
    if (is_nonpositive_integer(fc)) throw ParameterError("hypergeometric c of h is a nonpositive integer");
    h.label = "(x-a)(x-1)^(-s) 2F1(.; (a-1)/(x-1)), i = " + std::to_string(i);
    h.extra_singularities = {1.0};
    closed = [=](const Jet& x) { return (x - a) * ppow(x - 1.0, -s) * hyp2f1(fa, fb, fc, (a - 1.0) / (x - 1.0)); };
  }
  h.jet = [=](double xv) {
    const Jet hc = closed(Jet::variable(xv));
    if (!use_method) return hc;
    return Jet{hc.value, hc.d1, -heun_Q(p, xv) * hc.value};
  };
  return h;
}

HChoice build_h_conjugate(const HeunParams& p, ConjugateKind kind, DerivativeSource src) {
  HChoice h;
  h.method = HMethod::Conjugate;
  const bool method = src == DerivativeSource::FromMethod;
  if (kind == ConjugateKind::NegQ) {
    const HeunParams pm = p.with_q(-p.q());
    h.label = "H_l(a, -q; ...; x)";
    h.conjugate_q = [p](double x) { return (p.alpha() * p.beta() * x + p.q()) / (x * (x - 1.0) * (x - p.a())); };
    const auto qbar = h.conjugate_q;
    h.jet = [=](double x) {
      const Jet j = heun_l_jet(pm, x);
      if (!method) return j;
      return Jet{j.value, j.d1, -heun_P(p, x) * j.d1 - qbar(x) * j.value};
    };
    return h;
  }
  h.conjugate_q = [](double x) { return 1.0 / (1.0 - x * x); };
  h.extra_singularities = {-1.0, 0.0, 1.0};
  const auto check = [](double x) {
    if (!(x != 0.0 && std::fabs(x) < 1.0)) throw DomainError("elliptic h needs 0 < |x| < 1");
  };
  // Residual of h'' + h'/x + h/(1-x^2) = 0 solved for h''.
  const auto relation = [](double x, const Jet& j) { return Jet{j.value, j.d1, -j.d1 / x - j.value / (1.0 - x * x)}; };
  switch (kind) {
    case ConjugateKind::EllipticE:
      h.label = "E(x'), x' = sqrt(1 - x^2)";
      h.jet = [=](double xv) {
        check(xv);
        const Jet x = Jet::variable(xv);
        return ellip_e(sqrt(1.0 - x * x));
      };
      break;
    case ConjugateKind::EllipticEModulus:
      h.label = "E(|x|)";
      h.jet = [=](double xv) {
        check(xv);
        const Jet j = ellip_e(abs(Jet::variable(xv)));
        return method ? relation(xv, j) : j;
      };
      break;
    case ConjugateKind::EllipticEComplement:
      h.label = "E(x') - K(x')";
      h.jet = [=](double xv) {
        check(xv);
        const Jet x = Jet::variable(xv);
        const Jet xp = sqrt(1.0 - x * x);
        const Jet j = ellip_e(xp) - ellip_k(xp);
        return method ? relation(xv, j) : j;
      };
      break;
    case ConjugateKind::NegQ: break;
  }
  return h;
}

}  // namespace heunref
