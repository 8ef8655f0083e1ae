#pragma once

// Shared plumbing for the catalog entry files.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "heunref/catalog/identity.hpp"
#include "heunref/catalog/param_set.hpp"
#include "heunref/errors.hpp"
#include "heunref/specfun/heun_params.hpp"

namespace heunref::detail {

template <class T>
T ipow(const T& x, int n) {
  T r(1.0);
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

inline ParamRange range(std::string name, double lo, double hi) { return {std::move(name), lo, hi, {}}; }
inline ParamRange choice(std::string name, std::vector<double> c) { return {std::move(name), 0.0, 0.0, std::move(c)}; }

inline ParamRange range_a() { return choice("a", {2.0, 3.0, 4.0, 5.0}); }
inline ParamRange range_q() { return range("q", -1.0, 1.0); }
inline ParamRange range_exp(const char* name) { return range(name, 0.2, 2.5); }

/// The six free Heun parameters with the default ranges.
inline std::vector<ParamRange> heun_ranges() {
  return {range_a(), range_q(), range_exp("alpha"), range_exp("beta"), range_exp("gamma"), range_exp("delta")};
}

/// Default interval inside the origin series disk.
inline Interval series_interval(const HeunParams& p) { return {0.08, 0.9 * p.radius() - 0.05}; }

inline Interval plain_interval(const ParamSet& ps) { return series_interval(heun_params_of(ps)); }

/// Copies ps, overwriting the Heun keys from p (validated by construction).
inline ParamSet with_heun(const ParamSet& ps, const HeunParams& p) {
  ParamSet out = ps;
  store_heun(out, p);
  return out;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError("constraint violated: " + what);
}

inline bool near_any(double v, std::initializer_list<double> pts, double tol) {
  for (double p : pts)
    if (std::fabs(v - p) < tol) return true;
  return false;
}

using Exclusion = std::optional<std::string>;

void add_heun_entries(std::vector<Identity>& out);
void add_hypergeometric_entries(std::vector<Identity>& out);
void add_product_entries(std::vector<Identity>& out);

}  // namespace heunref::detail
