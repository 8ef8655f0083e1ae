#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heunref/catalog/identity.hpp"
#include "heunref/verifier/sample_plan.hpp"

namespace heunref {

enum class Verdict { Confirmed, Refuted, Inconclusive };
const char* to_string(Verdict v);

/// |A'(x) - I(x)| / (1 + |I(x)|) with A' exact (dual numbers).
double residual_derivative(const ConcreteIdentity& ci, double x);

struct DrawRecord {
  std::size_t index = 0;
  ParamSet params;
  Interval interval;
  double max_residual = 0.0;
  double quad_mismatch = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  /// Why a draw is inconclusive without numbers (exception text), else empty.
  std::string note;
};

/// Residuals at the midpoints of points_per_interval equal cells plus one
/// quadrature check of the whole interval. A degenerate interval (lo == hi)
/// has quadrature mismatch 0.
DrawRecord check_instance(const ConcreteIdentity& ci, const SamplePlan& plan);

/// Verdict of one draw from its two measurements.
Verdict draw_verdict(double max_residual, double quad_mismatch, const SamplePlan& plan);

/// REFUTED iff at least 80% of draws are refuted; CONFIRMED iff all are
/// confirmed; INCONCLUSIVE otherwise.
Verdict aggregate(const std::vector<DrawRecord>& draws);

struct VariantReport {
  std::string variant;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<DrawRecord> draws;
};

struct VerificationReport {
  std::string id;
  std::string anchor;
  StatusNote status = StatusNote::ClaimedNew;
  /// variants[0] is the printed form.
  std::vector<VariantReport> variants;
  /// First registered variant that is CONFIRMED when the printed form is not.
  std::optional<std::string> confirmed_variant;
  double wall_seconds = 0.0;

  Verdict verdict() const { return variants.front().verdict; }
};

enum class ExecPolicy { Serial, Parallel };

/// Worker count for the parallel policy: OpenMP's maximum, capped by
/// HEUNREF_THREADS when set to a positive integer.
int worker_count();

/// Checks one variant over pre-drawn parameters.
VariantReport verify_variant(const Identity& idy, const std::string& variant, const std::vector<ParamDraw>& draws,
                             const SamplePlan& plan, ExecPolicy policy = ExecPolicy::Parallel);

/// Draws once and checks every registered variant on the same draws.
VerificationReport verify_identity(const Identity& idy, const SamplePlan& plan, ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace heunref
