#pragma once

#include "heunref/dual.hpp"
#include "heunref/specfun/heun_params.hpp"

namespace heunref {

/// Parameter specializations under which H_l collapses to 2F1 of a
/// polynomial argument:
///   L1: H_l(2, ab; al, be, g, al+be-2g+1; x)        = 2F1(al/2, be/2; g; x(2-x))
///   L2: H_l(4, ab; al, be, 1/2, 2(al+be)/3; x)       = 2F1(al/3, be/3; 1/2; x(x-3)^2/4)
///   L3: H_l(2, ab; al, be, (al+be+2)/4, (al+be)/2; x) = 2F1(al/4, be/4; (al+be+2)/4; -4x(x-1)^2(x-2))
/// L3 holds only for x < 1 - 1/sqrt(2), where the quadratic map is monotone.
enum class Reduction { L1, L2, L3 };

/// gamma is used by L1 only.
HeunParams specialize(Reduction r, double alpha, double beta, double gamma = 1.0);

/// The polynomial maps.
double map_h(double x);  // x(2-x)
double map_f(double x);  // x(x-3)^2/4
double map_g(double x);  // -4x(x-1)^2(x-2)

template <class T>
T reduction_map(Reduction r, const T& x) {
  switch (r) {
    case Reduction::L1: return x * (2.0 - x);
    case Reduction::L2: return 0.25 * x * (x - 3.0) * (x - 3.0);
    case Reduction::L3: return -4.0 * x * (x - 1.0) * (x - 1.0) * (x - 2.0);
  }
  return x;
}

/// Prefactors of the derivative reductions, H_l'(x) = pre(x) 2F1(a+1, b+1; c+1; map(x)):
///   t = ab(1-x)/(2g), s = g t (3-x)/3 with g = 1/2, r = kappa (1-x)(2x^2-4x+1),
///   kappa = 2ab/(al+be+2).
template <class T>
T reduction_prefactor(Reduction r, const HeunParams& p, const T& x) {
  const double ab = p.alpha() * p.beta();
  switch (r) {
    case Reduction::L1: return ab * (1.0 - x) / (2.0 * p.gamma());
    case Reduction::L2: return p.gamma() * (ab * (1.0 - x) / (2.0 * p.gamma())) * (3.0 - x) / 3.0;
    case Reduction::L3: {
      const double kappa = 2.0 * ab / (p.alpha() + p.beta() + 2.0);
      return kappa * (1.0 - x) * (2.0 * x * x - 4.0 * x + 1.0);
    }
  }
  return x;
}

/// 2F1 parameters (a, b, c) that the reduction produces.
struct HypParams {
  double a, b, c;
};
HypParams reduction_hyp_params(Reduction r, const HeunParams& p);

struct ReductionPair {
  double heun_value;
  double hyp_value;
};

/// Both sides of L1-L3 at x. p must carry the case's specialization.
ReductionPair reduce_to_2f1(Reduction r, const HeunParams& p, double x);
/// Both sides of the derivative reductions (L4-L6): H_l'(x) and
/// pre(x) 2F1(a+1, b+1; c+1; map(x)).
ReductionPair reduce_derivative(Reduction r, const HeunParams& p, double x);

}  // namespace heunref
