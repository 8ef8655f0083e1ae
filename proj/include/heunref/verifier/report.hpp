#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "heunref/verifier/sample_plan.hpp"
#include "heunref/verifier/verify.hpp"

namespace heunref {

nlohmann::json plan_to_json(const SamplePlan& plan);
nlohmann::json draw_to_json(const DrawRecord& d);

/// {identity, anchor, status_note, verdict, confirmed_variant, draws, variants};
/// verdict and draws are the printed form's.
nlohmann::json report_to_json(const VerificationReport& r);

/// Full run document. Everything that varies between identical runs
/// (timestamp, wall times, thread count) lives under "header".
nlohmann::json run_to_json(const SamplePlan& plan, const std::vector<VerificationReport>& reports, int threads);

/// One row per (identity, variant, draw), with a header row.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace heunref
