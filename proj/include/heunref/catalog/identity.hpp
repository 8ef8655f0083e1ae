#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "heunref/catalog/param_set.hpp"
#include "heunref/dual.hpp"

namespace heunref {

enum class StatusNote { Known, ClaimedNew };
const char* to_string(StatusNote s);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// One identity with every parameter fixed: an integrand and a claimed
/// antiderivative on a validated interval. The antiderivative takes dual
/// numbers so its derivative is exact.
struct ConcreteIdentity {
  std::string id;
  std::string variant;
  ParamSet params;
  std::function<double(double)> integrand;
  std::function<Dual(const Dual&)> antiderivative;
  Interval interval;

  double antiderivative_at(double x) const { return antiderivative(Dual(x)).v; }
  double antiderivative_slope(double x) const { return antiderivative(Dual::variable(x)).d; }

  /// Copy with eps * x added to the antiderivative (fault injection).
  ConcreteIdentity perturbed(double eps) const;
};

/// Catalog record. `complete` turns free parameters into a full, validated
/// assignment (deriving the constrained ones) or throws ParameterError naming
/// the violated constraint. `build` instantiates one variant; "printed" is
/// always the first variant and encodes the formula as printed.
struct Identity {
  std::string id;
  std::string anchor;
  std::string constraints;
  StatusNote status = StatusNote::ClaimedNew;
  std::vector<ParamRange> free_params;
  std::vector<std::string> variants{"printed"};
  std::function<ParamSet(const ParamSet&)> complete;
  /// Soft exclusions used only when sampling (near-degenerate draws).
  std::function<std::optional<std::string>(const ParamSet&)> exclude;
  /// Verification interval for a completed assignment; may raise IntervalError.
  std::function<Interval(const ParamSet&)> default_interval;
  /// Builds one variant on default_interval(params).
  std::function<ConcreteIdentity(const ParamSet&, const std::string&)> build;

  bool has_variant(const std::string& v) const;
};

/// complete + build. Unknown variants raise ParameterError.
ConcreteIdentity instantiate(const Identity& idy, const ParamSet& params, const std::string& variant = "printed");

/// Longest sub-interval of [lo, hi] at distance >= margin from every point
/// of `bad`. Raises IntervalError when it is shorter than min_length.
Interval carve_interval(double lo, double hi, const std::vector<double>& bad, double margin, double min_length = 0.1);

}  // namespace heunref
