#include "heunref/verifier/verify.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "heunref/errors.hpp"
#include "heunref/verifier/quadrature.hpp"

namespace heunref {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "CONFIRMED";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

double residual_derivative(const ConcreteIdentity& ci, double x) {
  const double i = ci.integrand(x);
  return std::fabs(ci.antiderivative_slope(x) - i) / (1.0 + std::fabs(i));
}

Verdict draw_verdict(double max_residual, double quad_mismatch, const SamplePlan& plan) {
  if (!std::isfinite(max_residual) || !std::isfinite(quad_mismatch)) return Verdict::Inconclusive;
  if (max_residual > plan.refute_factor * plan.tol_residual || quad_mismatch > plan.refute_factor * plan.tol_quad)
    return Verdict::Refuted;
  if (max_residual <= plan.tol_residual && quad_mismatch <= plan.tol_quad) return Verdict::Confirmed;
  return Verdict::Inconclusive;
}

DrawRecord check_instance(const ConcreteIdentity& ci, const SamplePlan& plan) {
  DrawRecord r;
  r.params = ci.params;
  r.interval = ci.interval;
  const double lo = ci.interval.lo, hi = ci.interval.hi;
  const std::size_t n = plan.points_per_interval;
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = lo + (static_cast<double>(j) + 0.5) * (hi - lo) / static_cast<double>(n);
    const double res = residual_derivative(ci, x);
    if (!std::isfinite(res)) {
      worst = std::numeric_limits<double>::quiet_NaN();
      r.note = "non-finite residual";
      break;
    }
    worst = std::max(worst, res);
  }
  r.max_residual = worst;
  if (lo == hi) {
    r.quad_mismatch = 0.0;
  } else {
    try {
      const QuadResult q = quad_adaptive(ci.integrand, lo, hi, plan.tol_quad * 1e-3);
      const double delta = ci.antiderivative_at(hi) - ci.antiderivative_at(lo);
      r.quad_mismatch = std::fabs(q.value - delta) / (1.0 + std::fabs(delta));
    } catch (const ConvergenceError& e) {
      r.quad_mismatch = std::numeric_limits<double>::quiet_NaN();
      r.note = e.what();
    }
  }
  r.verdict = draw_verdict(r.max_residual, r.quad_mismatch, plan);
  return r;
}

Verdict aggregate(const std::vector<DrawRecord>& draws) {
  if (draws.empty()) return Verdict::Inconclusive;
  std::size_t refuted = 0, confirmed = 0;
  for (const DrawRecord& d : draws) {
    refuted += d.verdict == Verdict::Refuted;
    confirmed += d.verdict == Verdict::Confirmed;
  }
  if (5 * refuted >= 4 * draws.size()) return Verdict::Refuted;
  if (confirmed == draws.size()) return Verdict::Confirmed;
  return Verdict::Inconclusive;
}

int worker_count() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("HEUNREF_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0 && cap < n) n = static_cast<int>(cap);
  }
  return std::max(n, 1);
}

namespace {

DrawRecord run_draw(const Identity& idy, const std::string& variant, const ParamDraw& d, const SamplePlan& plan) {
  try {
    ConcreteIdentity ci = instantiate(idy, d.params, variant);
    if (plan.fault_epsilon != 0.0) ci = ci.perturbed(plan.fault_epsilon);
    DrawRecord r = check_instance(ci, plan);
    r.index = d.index;
    return r;
  } catch (const std::exception& e) {
    DrawRecord r;
    r.index = d.index;
    r.params = d.params;
    r.interval = d.interval;
    r.max_residual = r.quad_mismatch = std::numeric_limits<double>::quiet_NaN();
    r.verdict = Verdict::Inconclusive;
    r.note = e.what();
    return r;
  }
}

}  // namespace

VariantReport verify_variant(const Identity& idy, const std::string& variant, const std::vector<ParamDraw>& draws,
                             const SamplePlan& plan, ExecPolicy policy) {
  plan.validate();
  if (!idy.has_variant(variant)) throw ParameterError(idy.id + ": unknown variant '" + variant + "'");
  VariantReport rep;
  rep.variant = variant;
  rep.draws.resize(draws.size());
  const long n = static_cast<long>(draws.size());
  if (policy == ExecPolicy::Serial) {
    for (long i = 0; i < n; ++i) rep.draws[i] = run_draw(idy, variant, draws[i], plan);
  } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (long i = 0; i < n; ++i) rep.draws[i] = run_draw(idy, variant, draws[i], plan);
  }
  rep.verdict = aggregate(rep.draws);
  return rep;
}

VerificationReport verify_identity(const Identity& idy, const SamplePlan& plan, ExecPolicy policy) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<ParamDraw> draws = draw_parameters(idy, plan);
  VerificationReport rep;
  rep.id = idy.id;
  rep.anchor = idy.anchor;
  rep.status = idy.status;
  for (const std::string& v : idy.variants) rep.variants.push_back(verify_variant(idy, v, draws, plan, policy));
  if (rep.verdict() != Verdict::Confirmed)
    for (std::size_t k = 1; k < rep.variants.size(); ++k)
      if (rep.variants[k].verdict == Verdict::Confirmed) {
        rep.confirmed_variant = rep.variants[k].variant;
        break;
      }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace heunref
