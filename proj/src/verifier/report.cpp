#include "heunref/verifier/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

namespace heunref {

namespace {

nlohmann::json number(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json variant_to_json(const VariantReport& v) {
  nlohmann::json draws = nlohmann::json::array();
  for (const DrawRecord& d : v.draws) draws.push_back(draw_to_json(d));
  return {{"variant", v.variant}, {"verdict", to_string(v.verdict)}, {"draws", draws}};
}

}  // namespace

nlohmann::json plan_to_json(const SamplePlan& plan) {
  nlohmann::json ranges = nlohmann::json::object();
  for (const auto& [name, r] : plan.param_ranges) {
    if (r.choices.empty()) ranges[name] = {r.lo, r.hi};
    else ranges[name] = {{"choices", r.choices}};
  }
  return {{"n_param_draws", plan.n_param_draws},
          {"rng_seed", plan.rng_seed},
          {"tol_residual", plan.tol_residual},
          {"tol_quad", plan.tol_quad},
          {"refute_factor", plan.refute_factor},
          {"points_per_interval", plan.points_per_interval},
          {"max_attempts", plan.max_attempts},
          {"fault_epsilon", plan.fault_epsilon},
          {"param_ranges", ranges}};
}

nlohmann::json draw_to_json(const DrawRecord& d) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : d.params) params[k] = v;
  nlohmann::json j = {{"index", d.index},
                      {"params", params},
                      {"interval", {d.interval.lo, d.interval.hi}},
                      {"max_residual", number(d.max_residual)},
                      {"quad_mismatch", number(d.quad_mismatch)},
                      {"verdict", to_string(d.verdict)}};
  if (!d.note.empty()) j["note"] = d.note;
  return j;
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json variants = nlohmann::json::array();
  for (const VariantReport& v : r.variants) variants.push_back(variant_to_json(v));
  return {{"identity", r.id},
          {"anchor", r.anchor},
          {"status_note", to_string(r.status)},
          {"verdict", to_string(r.verdict())},
          {"confirmed_variant", r.confirmed_variant ? nlohmann::json(*r.confirmed_variant) : nlohmann::json(nullptr)},
          {"draws", variants.front().at("draws")},
          {"variants", variants}};
}

nlohmann::json run_to_json(const SamplePlan& plan, const std::vector<VerificationReport>& reports, int threads) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  nlohmann::json timings = nlohmann::json::object();
  nlohmann::json body = nlohmann::json::array();
  for (const VerificationReport& r : reports) {
    timings[r.id] = r.wall_seconds;
    body.push_back(report_to_json(r));
  }
  return {{"header", {{"timestamp", stamp}, {"wall_seconds", timings}, {"threads", threads}}},
          {"plan", plan_to_json(plan)},
          {"reports", body}};
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "identity,variant,draw,params,lo,hi,max_residual,quad_mismatch,verdict,note\n";
  for (const VerificationReport& r : reports)
    for (const VariantReport& v : r.variants)
      for (const DrawRecord& d : v.draws)
        out << r.id << ',' << csv_field(v.variant) << ',' << d.index << ',' << csv_field(format_params(d.params)) << ','
            << g17(d.interval.lo) << ',' << g17(d.interval.hi) << ',' << g17(d.max_residual) << ','
            << g17(d.quad_mismatch) << ',' << to_string(d.verdict) << ',' << csv_field(d.note) << '\n';
  return out.str();
}

}  // namespace heunref
