#include "heunref/catalog/param_set.hpp"

#include <cstdio>

#include "heunref/errors.hpp"

namespace heunref {

double get(const ParamSet& ps, const std::string& key) {
  const auto it = ps.find(key);
  if (it == ps.end()) throw ParameterError("missing parameter '" + key + "'");
  return it->second;
}

bool has(const ParamSet& ps, const std::string& key) { return ps.count(key) != 0; }

HeunParams heun_params_of(const ParamSet& ps) {
  return {get(ps, "a"), get(ps, "q"), get(ps, "alpha"), get(ps, "beta"), get(ps, "gamma"), get(ps, "delta")};
}

void store_heun(ParamSet& ps, const HeunParams& p) {
  ps["a"] = p.a();
  ps["q"] = p.q();
  ps["alpha"] = p.alpha();
  ps["beta"] = p.beta();
  ps["gamma"] = p.gamma();
  ps["delta"] = p.delta();
  ps["epsilon"] = p.epsilon();
}

std::string format_params(const ParamSet& ps) {
  std::string out;
  char buf[64];
  for (const auto& [k, v] : ps) {
    if (!out.empty()) out += ' ';
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += k + "=" + buf;
  }
  return out;
}

}  // namespace heunref
