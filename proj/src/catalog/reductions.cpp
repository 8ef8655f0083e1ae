#include "heunref/catalog/reductions.hpp"

#include <cmath>

#include "heunref/errors.hpp"
#include "heunref/specfun/heun_series.hpp"
#include "heunref/specfun/hyp2f1.hpp"

namespace heunref {

HeunParams specialize(Reduction r, double alpha, double beta, double gamma) {
  const double ab = alpha * beta;
  switch (r) {
    case Reduction::L1: return {2.0, ab, alpha, beta, gamma, alpha + beta - 2.0 * gamma + 1.0};
    case Reduction::L2: return {4.0, ab, alpha, beta, 0.5, 2.0 * (alpha + beta) / 3.0};
    case Reduction::L3: return {2.0, ab, alpha, beta, (alpha + beta + 2.0) / 4.0, (alpha + beta) / 2.0};
  }
  throw ParameterError("unknown reduction");
}

double map_h(double x) { return reduction_map(Reduction::L1, x); }
double map_f(double x) { return reduction_map(Reduction::L2, x); }
double map_g(double x) { return reduction_map(Reduction::L3, x); }

namespace {

void require_specialized(Reduction r, const HeunParams& p) {
  const HeunParams s = specialize(r, p.alpha(), p.beta(), p.gamma());
  const auto same = [](double u, double v) { return std::fabs(u - v) <= 1e-12 * std::fmax(1.0, std::fabs(v)); };
  if (!(same(p.a(), s.a()) && same(p.q(), s.q()) && same(p.gamma(), s.gamma()) && same(p.delta(), s.delta())))
    throw ParameterError("Heun parameters do not carry the requested reduction's specialization");
}

}  // namespace

HypParams reduction_hyp_params(Reduction r, const HeunParams& p) {
  const double al = p.alpha(), be = p.beta();
  switch (r) {
    case Reduction::L1: return {al / 2.0, be / 2.0, p.gamma()};
    case Reduction::L2: return {al / 3.0, be / 3.0, 0.5};
    case Reduction::L3: return {al / 4.0, be / 4.0, (al + be + 2.0) / 4.0};
  }
  throw ParameterError("unknown reduction");
}

ReductionPair reduce_to_2f1(Reduction r, const HeunParams& p, double x) {
  require_specialized(r, p);
  const HypParams h = reduction_hyp_params(r, p);
  return {heun_l(p, x), hyp2f1(h.a, h.b, h.c, reduction_map(r, x))};
}

ReductionPair reduce_derivative(Reduction r, const HeunParams& p, double x) {
  require_specialized(r, p);
  const HypParams h = reduction_hyp_params(r, p);
  return {heun_l_prime(p, x),
          reduction_prefactor(r, p, x) * hyp2f1(h.a + 1.0, h.b + 1.0, h.c + 1.0, reduction_map(r, x))};
}

}  // namespace heunref
