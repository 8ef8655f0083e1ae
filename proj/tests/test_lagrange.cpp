#include <doctest.h>

#include <cmath>

#include "heunref/errors.hpp"
#include "heunref/lagrange/coefficients.hpp"
#include "heunref/lagrange/conway.hpp"
#include "heunref/lagrange/h_builders.hpp"
#include "heunref/specfun/heun_series.hpp"
#include "heunref/verifier/heun_function.hpp"
#include "support.hpp"

using namespace heunref;
using testsupport::Gen;

namespace {

// |residual| / scale of an ODE a h'' + b h' + c h, with the terms given.
double rel(double t1, double t2, double t3) {
  return std::fabs(t1 + t2 + t3) / (std::fabs(t1) + std::fabs(t2) + std::fabs(t3) + 1e-300);
}

}  // namespace

TEST_CASE("property: master identity d/dx f(y h' - h y') = f (h'' + P h' + Q h) y") {
  Gen g(2001);
  for (int i = 0; i < 200; ++i) {
    const auto c = testsupport::random_master_case(g);
    INFO(c.label << " at x = " << c.x << " with " << c.p.str());
    CHECK(testsupport::master_identity_gap(c) <= 1e-6);
  }
}

TEST_CASE("weight and coefficients") {
  const HeunParams p(3.0, 0.2, 0.7, 1.1, 0.8, 1.3);
  const double x = 0.4;
  CHECK(weight_f(p, x) == doctest::Approx(std::pow(x, 0.8) * std::pow(0.6, 1.3) * std::pow(2.6, p.epsilon())));
  CHECK(weight_f(0.0, 0.0, 0.0, 3.0, 0.4) == 1.0);
  CHECK_THROWS_AS(weight_f(p, x, BranchMode::Strict), BranchError);
  const HeunParams pi(0.3, 0.2, 0.7, 1.1, 2.0, 1.0);
  CHECK(weight_f(pi, x, BranchMode::Strict) == doctest::Approx(0.16 * -0.6 * std::pow(0.1, pi.epsilon())));
  // f' = P f
  const double h = 1e-6;
  const double df = (weight_f(p, x + h) - weight_f(p, x - h)) / (2 * h);
  CHECK(df == doctest::Approx(heun_P(p, x) * weight_f(p, x)).epsilon(1e-8));
  const CoefficientPair cp = heun_coefficients(p), cc = conjugate_coefficients(p);
  CHECK(cp.q_at(x) == doctest::Approx(-cc.q_at(x) + 2 * 0.7 * 1.1 * x / (x * (x - 1) * (x - 3))));
  CHECK(cp.is_singular(1.0));
  CHECK_THROWS_AS(second_derivative_via_ode(cp, 1.0, 0.0, 3.0), DomainError);
  CHECK(heun_K(p, x) == doctest::Approx(x * (x - 1) * (x - 3) * heun_P(p, x)));
}

TEST_CASE("property: method relations hold for the closed forms") {
  Gen g(2002);
  for (int i = 0; i < 60; ++i) {
    const HeunParams b = testsupport::random_heun(g, {2.0, 3.0, 4.0, 5.0});
    const double x = g.uniform(0.1, 0.8);
    // h'' + P h' = 0
    {
      const HeunParams p(b.a(), b.q(), b.alpha(), b.beta(), b.gamma(), 0.0);
      if (std::fabs(p.gamma() - 1.0) > 0.05 && std::fabs(p.gamma() - 2.0) > 0.05) {
        const Jet j = build_h_eq2(p, Eq2Variant::Delta0, DerivativeSource::Closed).jet(x);
        CHECK(rel(j.d2, heun_P(p, x) * j.d1, 0.0) <= 1e-10);
      }
      const HeunParams pe(b.a(), b.q(), b.alpha(), 0.5 - b.alpha(), 0.5, 0.5);
      const Jet je = build_h_eq2(pe, Eq2Variant::Elliptic, DerivativeSource::Closed).jet(x);
      CHECK(rel(je.d2, heun_P(pe, x) * je.d1, 0.0) <= 1e-10);
    }
    // P h' + Q h = 0
    {
      const HChoice h = build_h_eq3(b, DerivativeSource::Closed);
      bool clear = true;
      for (double s : h.extra_singularities) clear = clear && std::fabs(x - s) > 0.05;
      if (clear) {
        const Jet j = h.jet(x);
        CHECK(rel(heun_P(b, x) * j.d1, heun_Q(b, x) * j.value, 0.0) <= 1e-10);
        const Jet m = build_h_eq3(b).jet(x);
        CHECK(m.d2 == doctest::Approx(j.d2).epsilon(1e-9));
      }
    }
    // conjugate: h'' + P h' + Qbar h = 0
    {
      const Jet j = build_h_conjugate(b, ConjugateKind::NegQ, DerivativeSource::Closed).jet(x);
      const double qbar = conjugate_coefficients(b).q_at(x);
      CHECK(rel(j.d2, heun_P(b, x) * j.d1, qbar * j.value) <= 1e-10);
    }
  }
}

TEST_CASE("Delta classes of P h' + Q h = 0 are all covered") {
  // a = 2, q = ab, delta = al + be - 2 g + 1 gives Delta = (al+be+1)(2g-al-be-1).
  const double al = 0.6, be = 0.9;
  const HeunParams zero(2.0, al * be, al, be, (al + be + 1) / 2, 0.0);
  CHECK(delta_discriminant(zero).cls == DeltaClass::Zero);
  const HeunParams pos(2.0, al * be, al, be, 2.0, al + be - 3.0);
  CHECK(delta_discriminant(pos).cls == DeltaClass::Positive);
  const HeunParams neg(2.0, al * be, al, be, 0.5, al + be);
  CHECK(delta_discriminant(neg).cls == DeltaClass::Negative);
  const HeunParams deg(2.0, 0.3, -1.0 - be, be, 0.7, 0.4);
  CHECK(delta_discriminant(deg).cls == DeltaClass::Degenerate);
  for (const HeunParams& p : {zero, pos, neg, deg}) {
    const HChoice h = build_h_eq3(p, DerivativeSource::Closed);
    for (double x : {0.15, 0.35, 0.6}) {
      bool clear = true;
      for (double s : h.extra_singularities) clear = clear && std::fabs(x - s) > 0.05;
      if (!clear) continue;
      const Jet j = h.jet(x);
      CHECK(rel(heun_P(p, x) * j.d1, heun_Q(p, x) * j.value, 0.0) <= 1e-10);
    }
  }
  // Delta = 0 with this specialization gives h = (x-1)^(-ab/(al+be+1)).
  const HChoice hz = build_h_eq3(zero, DerivativeSource::Closed);
  const double r = hz.h_at(0.3) / hz.h_at(0.6);
  CHECK(r == doctest::Approx(std::pow(0.7 / 0.4, -al * be / (al + be + 1))).epsilon(1e-12));
  HChoice bad = hz;
  bad.extra_singularities = {0.5};
  CHECK_THROWS_AS(require_clear(bad, 0.2, 0.48, 0.05), IntervalError);
  CHECK_NOTHROW(require_clear(bad, 0.2, 0.44, 0.05));
}

TEST_CASE("solutions of h'' + Q h = 0: derived forms solve it, printed q1 and h2 do not") {
  Gen g(2003);
  int printed_failures = 0, trials = 0;
  for (int i = 0; i < 40; ++i) {
    const HeunParams b = testsupport::random_heun(g, {2.0, 3.0, 4.0, 5.0});
    const HeunParams p(b.a(), b.q(), b.alpha(), -g.uniform(0.0, 1.5), b.gamma(), b.delta());
    const double rho = std::sqrt(1.0 - 4.0 * p.alpha() * p.beta());
    if (std::fabs(rho - std::round(rho)) < 0.05) continue;
    const double x = -g.uniform(1.25, 3.0) * p.a();
    for (int k : {1, 2}) {
      const Jet d = build_h_eq4(p, k, false, Eq4Form::Derived, DerivativeSource::Closed).jet(x);
      CHECK(rel(d.d2, heun_Q(p, x) * d.value, 0.0) <= 1e-9);
    }
    const Jet pr = build_h_eq4(p, 1, false, Eq4Form::Printed, DerivativeSource::Closed).jet(x);
    ++trials;
    printed_failures += rel(pr.d2, heun_Q(p, x) * pr.value, 0.0) > 1e-6;
    const HeunParams p0(p.a(), 0.0, p.alpha(), p.beta(), p.gamma(), p.delta());
    const double x0 = g.uniform(0.1, std::min(0.8, 1.0 - (p.a() - 1.0) / 8.0));
    for (int k : {1, 2}) {
      const Jet d = build_h_eq4(p0, k, true, Eq4Form::Derived, DerivativeSource::Closed).jet(x0);
      CHECK(rel(d.d2, heun_Q(p0, x0) * d.value, 0.0) <= 1e-9);
    }
    const Jet h1 = build_h_eq4(p0, 1, true, Eq4Form::Printed, DerivativeSource::Closed).jet(x0);
    CHECK(rel(h1.d2, heun_Q(p0, x0) * h1.value, 0.0) <= 1e-9);
    const Jet h2 = build_h_eq4(p0, 2, true, Eq4Form::Printed, DerivativeSource::Closed).jet(x0);
    CHECK(rel(h2.d2, heun_Q(p0, x0) * h2.value, 0.0) > 1e-6);
  }
  CHECK(trials > 20);
  CHECK(printed_failures == trials);
  CHECK_THROWS_AS(build_h_eq4(HeunParams(2.0, 0.3, 1.0, 1.0, 1.0, 1.0), 1, false), ParameterError);
  CHECK_THROWS_AS(build_h_eq4(HeunParams(2.0, 0.3, 1.0, -1.0, 1.0, 1.0), 1, true), ParameterError);
}

TEST_CASE("elliptic solutions of h'' + h'/x + h/(1-x^2) = 0") {
  const HeunParams p(2.0, 0.1, 0.3, -0.3, 1.0, 0.0);
  for (double x : {-0.8, -0.5, -0.25, 0.3, 0.7}) {
    for (ConjugateKind k : {ConjugateKind::EllipticEModulus, ConjugateKind::EllipticEComplement}) {
      const Jet j = build_h_conjugate(p, k, DerivativeSource::Closed).jet(x);
      CHECK(rel(j.d2, j.d1 / x, j.value / (1.0 - x * x)) <= 1e-10);
      const Jet m = build_h_conjugate(p, k).jet(x);
      CHECK(m.d2 == doctest::Approx(j.d2).epsilon(1e-9));
    }
    const Jet e = build_h_conjugate(p, ConjugateKind::EllipticE).jet(x);
    CHECK(rel(e.d2, e.d1 / x, e.value / (1.0 - x * x)) > 1e-3);
  }
  CHECK_THROWS_AS(build_h_conjugate(p, ConjugateKind::EllipticE).jet(1.2), DomainError);
}

TEST_CASE("property: Abel's identity f W(y1, y2) is constant") {
  Gen g(2004);
  for (int i = 0; i < 100; ++i) {
    const HeunParams p = testsupport::random_heun(g);
    if (std::fabs(p.gamma() - std::round(p.gamma())) < 0.05) continue;
    // second Frobenius solution at the origin
    const HeunParams p2(p.a(), p.q() - (p.gamma() - 1.0) * (p.a() * p.delta() + p.epsilon()),
                        p.alpha() - p.gamma() + 1.0, p.beta() - p.gamma() + 1.0, 2.0 - p.gamma(), p.delta());
    auto fw = [&](double x) {
      const Jet y1 = heun_l_jet(p, x);
      const Jet u = heun_l_jet(p2, x);
      const double s = std::pow(x, 1.0 - p.gamma());
      const double y2 = s * u.value, y2p = s * (u.d1 + (1.0 - p.gamma()) / x * u.value);
      return weight_f(p, x) * (y1.value * y2p - y1.d1 * y2);
    };
    const double r = 0.9 * heun_safe_radius(p);
    const double x1 = g.uniform(0.05, r), x2 = g.uniform(0.05, r);
    CHECK(fw(x1) == doctest::Approx(fw(x2)).epsilon(1e-8));
  }
}

TEST_CASE("FromMethod and Closed agree for the elementary and constant h") {
  const HChoice h = build_h_elementary(2, 0.4, 2, 1.3, ElementaryBranch::Sin);
  CHECK(h.method == HMethod::Elementary);
  const double x = 0.6, s = 1e-5;
  CHECK(h.h1_at(x) == doctest::Approx((h.h_at(x + s) - h.h_at(x - s)) / (2 * s)).epsilon(1e-8));
  CHECK(h.h2_at(x) == doctest::Approx((h.h1_at(x + s) - h.h1_at(x - s)) / (2 * s)).epsilon(1e-8));
  CHECK(build_h_elementary(0, 0.0, 1, 1.0, ElementaryBranch::None).method == HMethod::Constant);
}
