#include "heunref/verifier/sample_plan.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "heunref/errors.hpp"

namespace heunref {

void SamplePlan::validate() const {
  if (n_param_draws == 0) throw ConfigError("n_param_draws must be positive");
  if (points_per_interval == 0) throw ConfigError("points_per_interval must be positive");
  if (max_attempts == 0) throw ConfigError("max_attempts must be positive");
  if (!(tol_residual > 0.0) || !(tol_quad > 0.0)) throw ConfigError("tolerances must be positive");
  if (!(refute_factor > 1.0)) throw ConfigError("refute_factor must exceed 1");
  if (!std::isfinite(fault_epsilon)) throw ConfigError("fault_epsilon must be finite");
  for (const auto& [name, r] : param_ranges)
    if (r.choices.empty() && !(r.lo <= r.hi)) throw ConfigError("empty range for " + name);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Portable uniform on [0, 1): the distribution classes are not specified bit for bit.
double unit(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

double sample(const ParamRange& r, std::mt19937_64& g) {
  if (!r.choices.empty()) return r.choices[std::min(r.choices.size() - 1, static_cast<std::size_t>(unit(g) * r.choices.size()))];
  return r.lo + (r.hi - r.lo) * unit(g);
}

}  // namespace

std::uint64_t draw_seed(std::uint64_t seed, const std::string& id, std::size_t index) {
  return splitmix64(seed ^ fnv1a(id) ^ static_cast<std::uint64_t>(index));
}

std::vector<ParamDraw> draw_parameters(const Identity& idy, const SamplePlan& plan) {
  plan.validate();
  std::vector<ParamDraw> out;
  for (std::size_t i = 0; i < plan.n_param_draws; ++i) {
    std::mt19937_64 g(draw_seed(plan.rng_seed, idy.id, i));
    for (std::size_t attempt = 0; attempt < plan.max_attempts; ++attempt) {
      ParamSet ps;
      for (const ParamRange& r : idy.free_params) {
        auto it = plan.param_ranges.find(r.name);
        ps[r.name] = sample(it == plan.param_ranges.end() ? r : it->second, g);
      }
      try {
        ParamSet full = idy.complete(ps);
        if (idy.exclude && idy.exclude(full)) continue;
        const Interval iv = idy.default_interval(full);
        out.push_back({i, std::move(full), iv});
        break;
      } catch (const ParameterError&) {
      } catch (const IntervalError&) {
      } catch (const DomainError&) {
      }
    }
  }
  if (out.empty()) throw EmptyPlanError(idy.id + ": every parameter draw was excluded");
  return out;
}

namespace {

void apply_key(SamplePlan& plan, const std::string& key, double v) {
  auto count = [&](const char* what) {
    if (!(v >= 0.0) || v != std::floor(v)) throw ConfigError(std::string(what) + " must be a nonnegative integer");
    return static_cast<std::size_t>(v);
  };
  if (key == "n_param_draws" || key == "draws") plan.n_param_draws = count("draws");
  else if (key == "rng_seed" || key == "seed") plan.rng_seed = static_cast<std::uint64_t>(count("seed"));
  else if (key == "tol_residual") plan.tol_residual = v;
  else if (key == "tol_quad") plan.tol_quad = v;
  else if (key == "tol") plan.tol_residual = plan.tol_quad = v;
  else if (key == "refute_factor") plan.refute_factor = v;
  else if (key == "points_per_interval") plan.points_per_interval = count("points_per_interval");
  else if (key == "max_attempts") plan.max_attempts = count("max_attempts");
  else if (key == "fault_epsilon") plan.fault_epsilon = v;
  else throw ConfigError("unknown plan key '" + key + "'");
}

void apply_json(SamplePlan& plan, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config root must be an object");
  const nlohmann::json& body = j.contains("plan") ? j.at("plan") : j;
  for (const auto& [key, val] : body.items()) {
    if (key == "param_ranges") {
      for (const auto& [name, r] : val.items()) {
        ParamRange pr{name, 0.0, 0.0, {}};
        if (r.is_array() && r.size() == 2 && r[0].is_number() && r[1].is_number()) {
          pr.lo = r[0].get<double>();
          pr.hi = r[1].get<double>();
        } else if (r.is_object() && r.contains("choices")) {
          pr.choices = r.at("choices").get<std::vector<double>>();
        } else {
          throw ConfigError("param_ranges." + name + " must be [lo, hi] or {\"choices\": [...]}");
        }
        plan.param_ranges[name] = pr;
      }
    } else if (val.is_number()) {
      apply_key(plan, key, val.get<double>());
    } else {
      throw ConfigError("plan key '" + key + "' must be a number");
    }
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Flat `key = number` lines; an optional [plan] table header; # comments.
void apply_toml(SamplePlan& plan, std::istream& in) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty() || line == "[plan]") continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != val.size()) throw ConfigError("line " + std::to_string(lineno) + ": '" + val + "' is not a number");
    apply_key(plan, key, v);
  }
}

}  // namespace

SamplePlan load_plan_file(const std::string& path, SamplePlan base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(path + ": " + e.what());
    }
    apply_json(base, j);
  } else if (ext == "toml") {
    apply_toml(base, in);
  } else {
    throw ConfigError("config file must end in .json or .toml: " + path);
  }
  base.validate();
  return base;
}

}  // namespace heunref
