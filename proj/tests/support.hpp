#pragma once

// Shared test helpers: a seeded generator, independent oracles and random
// (params, h) combinations for the master identity.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "heunref/lagrange/coefficients.hpp"
#include "heunref/lagrange/conway.hpp"
#include "heunref/lagrange/h_builders.hpp"
#include "heunref/specfun/heun_series.hpp"

namespace testsupport {

/// splitmix64 stream; enough for property tests and fully reproducible.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53); }
  int pick(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[pick(static_cast<int>(v.size()))]; }

 private:
  std::uint64_t s_;
};

/// Generic Heun parameters away from degenerate exponents.
inline heunref::HeunParams random_heun(Gen& g, std::vector<double> as = {-3.0, -2.0, 2.0, 3.0, 4.0, 5.0}) {
  return heunref::HeunParams(g.pick(as), g.uniform(-1.0, 1.0), g.uniform(0.2, 2.5), g.uniform(0.2, 2.5),
                             g.uniform(0.2, 2.5), g.uniform(0.2, 2.5));
}

/// K(k) and E(k) from the arithmetic-geometric mean, independent of Carlson's forms.
struct AgmKE {
  double K, E;
};
inline AgmKE agm_ke(double k) {
  long double a = 1.0L, b = std::sqrt(1.0L - static_cast<long double>(k) * k), c = k;
  long double sum = 0.5L * c * c, pow2 = 0.5L;
  for (int n = 1; n < 40 && std::fabs(static_cast<double>(c)) > 1e-22; ++n) {
    const long double an = (a + b) / 2.0L, bn = std::sqrt(a * b);
    c = (a - b) / 2.0L;
    pow2 *= 2.0L;
    sum += pow2 * c * c;
    a = an;
    b = bn;
  }
  const long double K = std::numbers::pi_v<long double> / (2.0L * a);
  return {static_cast<double>(K), static_cast<double>(K * (1.0L - sum))};
}

/// One random instance of the master identity: parameters, an h and a point.
struct MasterCase {
  heunref::HeunParams p;
  heunref::HChoice h;
  double x;
  std::string label;
};

/// Draws h from every builder family; x inside the series disk and clear of
/// the singular points of h.
inline MasterCase random_master_case(Gen& g) {
  using namespace heunref;
  for (;;) {
    try {
      const int kind = g.pick(7);
      HeunParams p = random_heun(g, {2.0, 3.0, 4.0, 5.0});
      HChoice h;
      std::string label;
      switch (kind) {
        case 0: {
          const auto br = static_cast<ElementaryBranch>(g.pick(3));
          h = build_h_elementary(g.pick(4), g.uniform(-1.0, 1.0), 1 + g.pick(3), g.uniform(0.2, 3.0), br);
          label = "elementary";
          break;
        }
        case 1:
          p = HeunParams(p.a(), p.q(), p.alpha(), 0.5 - p.alpha(), 0.5, 0.5);
          h = build_h_eq2(p, Eq2Variant::Elliptic, DerivativeSource::Closed);
          label = "eq2 elliptic";
          break;
        case 2:
          p = HeunParams(p.a(), p.q(), p.alpha(), p.beta(), p.gamma(), 0.0);
          if (std::fabs(p.gamma() - 1.0) < 0.05 || std::fabs(p.gamma() - 2.0) < 0.05) continue;
          h = build_h_eq2(p, Eq2Variant::Delta0, DerivativeSource::Closed);
          label = "eq2 delta=0";
          break;
        case 3:
          p = HeunParams(p.a(), p.q(), p.alpha(), p.beta(), p.gamma(), p.alpha() + p.beta() + 1.0 - p.gamma());
          if (std::fabs(p.gamma() - 1.0) < 0.05 || std::fabs(p.gamma() - 2.0) < 0.05) continue;
          h = build_h_eq2(p, Eq2Variant::Eps0, DerivativeSource::Closed);
          label = "eq2 eps=0";
          break;
        case 4:
          h = build_h_eq3(p, DerivativeSource::Closed);
          label = "eq3";
          break;
        case 5: {
          p = HeunParams(p.a(), 0.0, p.alpha(), -g.uniform(0.0, 1.5), p.gamma(), p.delta());
          const double rho = std::sqrt(1.0 - 4.0 * p.alpha() * p.beta());
          if (std::fabs(rho - std::round(rho)) < 0.05) continue;
          h = build_h_eq4(p, 1 + g.pick(2), true, Eq4Form::Derived, DerivativeSource::Closed);
          label = "eq4 q=0";
          break;
        }
        default:
          h = build_h_conjugate(p, ConjugateKind::NegQ, DerivativeSource::Closed);
          label = "conjugate";
          break;
      }
      double hi = 0.9 * heun_safe_radius(p);
      if (kind == 5) hi = std::min(hi, 1.0 - (p.a() - 1.0) / 8.0);
      const double x = g.uniform(0.1, hi);
      bool clear = true;
      for (double s : h.extra_singularities) clear = clear && std::fabs(x - s) > 0.05;
      if (!clear) continue;
      return {p, h, x, label};
    } catch (const std::exception&) {
      // constraint violated by this draw; redraw
    }
  }
}

/// |d/dx rhs (central difference) - lhs| / (1 + |lhs|).
inline double master_identity_gap(const MasterCase& c, double step = 1e-5) {
  using namespace heunref;
  const CoefficientPair cp = heun_coefficients(c.p);
  const WeightFn fw = [p = c.p](double x) { return weight_f(p, x); };
  const JetFn y = [p = c.p](double x) { return heun_l_jet(p, x); };
  const double lhs = conway_lhs_integrand(cp, fw, c.h, y, c.x);
  const double d = (conway_rhs(fw, c.h, y, c.x + step) - conway_rhs(fw, c.h, y, c.x - step)) / (2.0 * step);
  return std::fabs(d - lhs) / (1.0 + std::fabs(lhs));
}

}  // namespace testsupport
