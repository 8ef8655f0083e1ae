#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "heunref/catalog/identity.hpp"
#include "heunref/catalog/param_set.hpp"

namespace heunref {

/// How an identity is sampled and judged.
struct SamplePlan {
  std::size_t n_param_draws = 20;
  std::uint64_t rng_seed = 42;
  double tol_residual = 1e-8;
  double tol_quad = 1e-8;
  double refute_factor = 1e3;
  std::size_t points_per_interval = 50;
  /// Overrides of an entry's default free-parameter ranges, by name.
  std::map<std::string, ParamRange> param_ranges;
  /// Rejection-sampling budget per draw (constraints, exclusions, interval).
  std::size_t max_attempts = 200;
  /// When nonzero, eps * x is added to every antiderivative (fault injection).
  double fault_epsilon = 0.0;

  /// Throws ConfigError on nonpositive tolerances, refute_factor <= 1, zero
  /// draws, zero points or an empty range.
  void validate() const;
};

/// One accepted parameter draw: the completed assignment and its interval.
struct ParamDraw {
  std::size_t index = 0;
  ParamSet params;
  Interval interval;
};

/// Seed of the index-th draw of identity id. Depends only on (seed, id, index).
std::uint64_t draw_seed(std::uint64_t seed, const std::string& id, std::size_t index);

/// Rejection-samples n_param_draws assignments. A draw whose attempts all
/// fail is dropped; when every draw is dropped EmptyPlanError is raised.
std::vector<ParamDraw> draw_parameters(const Identity& idy, const SamplePlan& plan);

/// Reads plan fields from a JSON or flat TOML file (chosen by extension) on
/// top of base. Unknown keys and malformed values raise ConfigError.
SamplePlan load_plan_file(const std::string& path, SamplePlan base = {});

}  // namespace heunref
