// heunref: list the catalog, evaluate kernels, run verification sweeps.
//
// Exit codes: 0 all printed forms CONFIRMED, 1 some REFUTED, 3 some
// INCONCLUSIVE (none refuted), 2 kernel domain/parameter error in `eval`,
// 4 configuration error (bad flags, config file, empty selection).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "heunref/catalog/catalog.hpp"
#include "heunref/errors.hpp"
#include "heunref/specfun/elliptic.hpp"
#include "heunref/specfun/heun_series.hpp"
#include "heunref/specfun/hyp2f1.hpp"
#include "heunref/verifier/report.hpp"
#include "heunref/verifier/verify.hpp"

using namespace heunref;

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitConfig = 4;

// 15 significant digits; exact integers print bare.
std::string format15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.15g", v);
  std::string s = buf;
  const auto dot = s.find('.');
  if (dot != std::string::npos && s.find_first_of("eE") == std::string::npos &&
      s.find_first_not_of('0', dot + 1) == std::string::npos)
    s.erase(dot);
  return s;
}

int cmd_list(const std::string& filter, const std::string& format) {
  const auto ids = select_identities(filter);
  if (ids.empty()) {
    std::cerr << "warning: no identities matched '" << filter << "'\n";
    return kExitConfig;
  }
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const Identity* e : ids)
      j.push_back({{"id", e->id},
                   {"anchor", e->anchor},
                   {"constraints", e->constraints},
                   {"status_note", to_string(e->status)},
                   {"variants", e->variants}});
    std::cout << j.dump(2) << '\n';
  } else {
    for (const Identity* e : ids)
      std::cout << e->id << '\t' << to_string(e->status) << '\t' << e->anchor << "\t[" << e->constraints << "]\n";
  }
  return 0;
}

int cmd_eval(const std::string& fn, const std::vector<double>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw ConfigError(fn + " takes " + std::to_string(n) + " arguments, got " + std::to_string(args.size()));
  };
  double v = 0.0;
  try {
    if (fn == "heun_l" || fn == "heun_l_prime") {
      need(7);
      const HeunParams p(args[0], args[1], args[2], args[3], args[4], args[5]);
      v = fn == "heun_l" ? heun_l(p, args[6]) : heun_l_prime(p, args[6]);
    } else if (fn == "hyp2f1") {
      need(4);
      v = hyp2f1(args[0], args[1], args[2], args[3]);
    } else if (fn == "ellip_f") {
      need(2);
      v = ellip_f(args[0], args[1]);
    } else if (fn == "ellip_k") {
      need(1);
      v = ellip_k(args[0]);
    } else if (fn == "ellip_e") {
      need(1);
      v = ellip_e(args[0]);
    } else {
      throw ConfigError("unknown function '" + fn + "' (heun_l, heun_l_prime, hyp2f1, ellip_f, ellip_k, ellip_e)");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  std::cout << format15(v) << '\n';
  return 0;
}

struct VerifyOptions {
  std::string filter = "*";
  std::optional<std::uint64_t> seed;
  std::optional<long long> draws;
  std::optional<double> tol;
  std::optional<double> fault_epsilon;
  std::string out;
  std::string format;
  std::string config;
  bool serial = false;
  bool verbose = false;
};

int exit_code(const std::vector<VerificationReport>& reports) {
  bool inconclusive = false;
  for (const VerificationReport& r : reports) {
    if (r.verdict() == Verdict::Refuted) return 1;
    inconclusive |= r.verdict() == Verdict::Inconclusive;
  }
  return inconclusive ? 3 : 0;
}

int cmd_verify(const VerifyOptions& o) {
  SamplePlan plan;
  if (!o.config.empty()) plan = load_plan_file(o.config);
  if (o.seed) plan.rng_seed = *o.seed;
  if (o.draws) {
    if (*o.draws <= 0) throw ConfigError("--draws must be positive");
    plan.n_param_draws = static_cast<std::size_t>(*o.draws);
  }
  if (o.tol) plan.tol_residual = plan.tol_quad = *o.tol;
  if (o.fault_epsilon) plan.fault_epsilon = *o.fault_epsilon;
  plan.validate();

  std::string format = o.format;
  if (format.empty()) format = o.out.size() > 4 && o.out.substr(o.out.size() - 4) == ".csv" ? "csv" : "json";

  const auto ids = select_identities(o.filter);
  if (ids.empty()) {
    std::cerr << "error: no identities matched '" << o.filter << "'\n";
    return kExitConfig;
  }
  const ExecPolicy policy = o.serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
  std::vector<VerificationReport> reports;
  for (const Identity* e : ids) {
    try {
      reports.push_back(verify_identity(*e, plan, policy));
    } catch (const EmptyPlanError& err) {
      VerificationReport r;
      r.id = e->id;
      r.anchor = e->anchor;
      r.status = e->status;
      r.variants.push_back({"printed", Verdict::Inconclusive, {}});
      reports.push_back(r);
      std::cerr << "warning: " << err.what() << '\n';
    }
    const VerificationReport& r = reports.back();
    std::cout << r.id << '\t' << to_string(r.verdict());
    if (r.confirmed_variant) std::cout << "\tconfirmed variant: " << *r.confirmed_variant;
    std::cout << '\n';
    if (o.verbose)
      for (const VariantReport& v : r.variants) {
        std::size_t conf = 0, ref = 0;
        for (const DrawRecord& d : v.draws) {
          conf += d.verdict == Verdict::Confirmed;
          ref += d.verdict == Verdict::Refuted;
        }
        std::cout << "  " << v.variant << ": " << to_string(v.verdict) << " (" << conf << " confirmed, " << ref
                  << " refuted of " << v.draws.size() << ")\n";
      }
  }
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw ConfigError("cannot write " + o.out);
    if (format == "csv") f << reports_to_csv(reports);
    else f << run_to_json(plan, reports, o.serial ? 1 : worker_count()).dump(2) << '\n';
  }
  return exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reference checker for indefinite integrals of Heun and hypergeometric functions"};
  app.require_subcommand(1);

  std::string list_filter = "*", list_format = "text";
  auto* list = app.add_subcommand("list", "Print the identity catalog");
  list->add_option("--filter,--only", list_filter, "Glob over identity ids");
  list->add_option("--format", list_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string fn;
  std::vector<double> args;
  auto* eval = app.add_subcommand("eval", "Evaluate a kernel: heun_l, heun_l_prime, hyp2f1, ellip_f, ellip_k, ellip_e");
  eval->add_option("function", fn, "Kernel name")->required();
  eval->add_option("args", args, "Numeric arguments")->allow_extra_args();

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Verify catalog identities on random parameter draws");
  verify->add_option("--only,--filter", vo.filter, "Glob over identity ids");
  verify->add_option("--seed", vo.seed, "RNG seed");
  verify->add_option("--draws", vo.draws, "Parameter draws per identity");
  verify->add_option("--tol", vo.tol, "Residual and quadrature tolerance");
  verify->add_option("--fault-epsilon", vo.fault_epsilon, "Add eps*x to every antiderivative");
  verify->add_option("--out", vo.out, "Report file");
  verify->add_option("--format", vo.format, "json or csv (default from --out)")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--config", vo.config, "Plan file (.json or .toml)");
  verify->add_flag("--serial", vo.serial, "Run draws on one thread");
  verify->add_flag("-v,--verbose", vo.verbose, "Per-variant verdicts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*list) return cmd_list(list_filter, list_format);
    if (*eval) return cmd_eval(fn, args);
    if (*verify) return cmd_verify(vo);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const EmptyPlanError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
