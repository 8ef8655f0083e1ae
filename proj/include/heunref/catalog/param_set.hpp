#pragma once

#include <map>
#include <string>
#include <vector>

#include "heunref/specfun/heun_params.hpp"

namespace heunref {

/// Named parameter assignment. Ordered, so iteration and serialization are
/// deterministic.
using ParamSet = std::map<std::string, double>;

/// A free parameter: uniform on [lo, hi], or uniform over `choices` when set.
struct ParamRange {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> choices;
};

double get(const ParamSet& ps, const std::string& key);
bool has(const ParamSet& ps, const std::string& key);

/// (a, q; alpha, beta, gamma, delta) from the standard keys.
HeunParams heun_params_of(const ParamSet& ps);

/// Writes the Heun keys (and the derived epsilon) into ps.
void store_heun(ParamSet& ps, const HeunParams& p);

std::string format_params(const ParamSet& ps);

}  // namespace heunref
