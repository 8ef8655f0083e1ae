#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "heunref/catalog/catalog.hpp"
#include "heunref/errors.hpp"
#include "heunref/specfun/elliptic.hpp"
#include "heunref/specfun/heun_series.hpp"
#include "heunref/verifier/heun_function.hpp"
#include "heunref/verifier/ode_oracle.hpp"
#include "heunref/verifier/quadrature.hpp"
#include "heunref/verifier/report.hpp"
#include "heunref/verifier/verify.hpp"
#include "support.hpp"

using namespace heunref;
using testsupport::Gen;

TEST_CASE("quadrature on textbook integrals") {
  CHECK(std::fabs(quad_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-14).value - 1.0 / 3.0) <= 1e-14);
  CHECK(std::fabs(quad_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-13).value - 2.0) <= 1e-12);
  CHECK(quad_adaptive([](double x) { return x; }, 0.3, 0.3, 1e-10).value == 0.0);
  const double fwd = quad_adaptive([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12).value;
  CHECK(quad_adaptive([](double x) { return std::exp(x); }, 1.0, 0.0, 1e-12).value == doctest::Approx(-fwd));
  // Endpoint singularity at 0 removed by u = sin^2(t): du/sqrt(u(1-u)(2-u)) = 2 dt / sqrt(2 - sin^2 t).
  const double v = quad_adaptive([](double t) { return 2.0 / std::sqrt(2.0 - std::sin(t) * std::sin(t)); }, 0.0,
                                 std::numbers::pi / 4, 1e-13)
                       .value;
  CHECK(v == doctest::Approx(1.1681656833543034134).epsilon(1e-13));
  CHECK(v == doctest::Approx(std::numbers::sqrt2 * ellip_f(std::numbers::pi / 4, 1.0 / std::numbers::sqrt2)).epsilon(1e-13));
  CHECK_THROWS_AS(quad_adaptive([](double x) { return x > 0.5 ? 1.0 / (x - 0.5) : 0.0; }, 0.0, 1.0, 1e-12),
                  ConvergenceError);
}

TEST_CASE("property: quadrature is additive over random splits") {
  Gen g(3001);
  for (int i = 0; i < 100; ++i) {
    const double a = g.uniform(-2.0, 2.0), b = g.uniform(0.5, 3.0), w = g.uniform(0.5, 8.0);
    auto f = [=](double x) { return std::exp(a * x) * std::cos(w * x) + b; };
    const double lo = g.uniform(-1.0, 0.0), hi = g.uniform(0.5, 2.0), m = g.uniform(lo, hi);
    const QuadResult whole = quad_adaptive(f, lo, hi, 1e-12);
    const QuadResult l = quad_adaptive(f, lo, m, 1e-12), r = quad_adaptive(f, m, hi, 1e-12);
    const double budget = whole.error + l.error + r.error + 1e-12 * (1.0 + std::fabs(whole.value));
    CHECK(std::fabs(whole.value - l.value - r.value) <= budget);
  }
}

TEST_CASE("ODE oracle basics") {
  const HeunParams flat(2.0, 0.0, 0.0, 1.3, 0.9, 1.1);
  for (const OdeState& s : ode_oracle(flat, 0.1, {0.3, 0.6, 0.9})) {
    CHECK(s.y == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::fabs(s.y1) <= 1e-14);
  }
  const HeunParams p(3.0, 0.4, 0.7, 1.3, 0.9, 1.1);
  CHECK_THROWS_AS(ode_oracle(p, 0.1, {0.5, 1.2}), PropagationError);
  CHECK_THROWS_AS(ode_oracle(p, 0.1, {-0.2}), PropagationError);
  CHECK_THROWS_AS(series_start(p, 0.9), PropagationError);
  // L1 specialization: oracle against the series.
  const double al = 0.9, be = 1.4, g = 1.2;
  const HeunParams l1(2.0, al * be, al, be, g, al + be - 2 * g + 1);
  const auto out = ode_oracle(l1, 0.05, {0.2, 0.5, 0.8});
  for (const OdeState& s : out) {
    CHECK(s.y == doctest::Approx(heun_l(l1, s.x)).epsilon(1e-9));
    CHECK(s.y1 == doctest::Approx(heun_l_prime(l1, s.x)).epsilon(1e-9));
  }
}

TEST_CASE("property: oracle and series agree inside the disk") {
  Gen g(3002);
  for (int i = 0; i < 40; ++i) {
    const HeunParams p = testsupport::random_heun(g);
    const double side = g.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0, r = 0.9 * heun_safe_radius(p);
    std::vector<double> xs;
    for (int k = 1; k <= 8; ++k) xs.push_back(side * r * k / 8.0);
    const auto out = ode_oracle(p, side * 0.05, xs);
    for (const OdeState& s : out) {
      const Jet j = heun_l_jet(p, s.x);
      CHECK(std::fabs(s.y - j.value) <= 1e-9 * std::max(1.0, std::fabs(j.value)));
      CHECK(std::fabs(s.y1 - j.d1) <= 1e-9 * std::max(1.0, std::fabs(j.d1)));
    }
  }
}

TEST_CASE("anchored Heun function matches the series where both apply") {
  const HeunParams p(5.0, 0.3, 1.1, 0.6, 1.4, 0.8);
  const HeunFunction f = HeunFunction::anchored(p, -0.85, -0.3);
  CHECK_FALSE(f.is_series());
  for (double x : {-0.85, -0.7123, -0.5, -0.3}) {
    CHECK(f.value(x) == doctest::Approx(heun_l(p, x)).epsilon(1e-9));
    CHECK(f.slope(x) == doctest::Approx(heun_l_prime(p, x)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(HeunFunction::anchored(p, -0.5, 0.5), IntervalError);
}

TEST_CASE("residuals and draw verdicts") {
  SamplePlan plan;
  ConcreteIdentity zero;
  zero.integrand = [](double) { return 0.0; };
  zero.antiderivative = [](const Dual&) { return Dual(0.0); };
  zero.interval = {0.1, 0.8};
  CHECK(residual_derivative(zero, 0.3) == 0.0);
  DrawRecord r = check_instance(zero, plan);
  CHECK(r.verdict == Verdict::Confirmed);
  CHECK(check_instance(zero.perturbed(0.01), plan).verdict == Verdict::Refuted);
  CHECK(residual_derivative(zero.perturbed(0.01), 0.3) == doctest::Approx(0.01));
  zero.interval = {0.4, 0.4};
  r = check_instance(zero, plan);
  CHECK(r.quad_mismatch == 0.0);
  CHECK(r.verdict == Verdict::Confirmed);
  CHECK(draw_verdict(2e-8, 0.0, plan) == Verdict::Inconclusive);
  CHECK(draw_verdict(2e-5, 0.0, plan) == Verdict::Refuted);
  CHECK(draw_verdict(0.0, std::nan(""), plan) == Verdict::Inconclusive);
}

TEST_CASE("aggregate verdict quorum") {
  auto draws = [](int refuted, int confirmed, int other) {
    std::vector<DrawRecord> v;
    for (int i = 0; i < refuted; ++i) v.push_back({.verdict = Verdict::Refuted});
    for (int i = 0; i < confirmed; ++i) v.push_back({.verdict = Verdict::Confirmed});
    for (int i = 0; i < other; ++i) v.push_back({.verdict = Verdict::Inconclusive});
    return v;
  };
  CHECK(aggregate(draws(8, 2, 0)) == Verdict::Refuted);
  CHECK(aggregate(draws(7, 3, 0)) == Verdict::Inconclusive);
  CHECK(aggregate(draws(0, 10, 0)) == Verdict::Confirmed);
  CHECK(aggregate(draws(0, 9, 1)) == Verdict::Inconclusive);
}

TEST_CASE("F12 residuals sit at rounding level") {
  const Identity& e = *find_identity("ID-F12");
  SamplePlan plan;
  for (const ParamDraw& d : draw_parameters(e, plan)) {
    const ConcreteIdentity ci = instantiate(e, d.params);
    for (int k = 0; k < 20; ++k) {
      const double x = ci.interval.lo + (k + 0.5) / 20.0 * (ci.interval.hi - ci.interval.lo);
      CHECK(residual_derivative(ci, x) <= 1e-10);
    }
  }
}

TEST_CASE("verify on known and misprinted entries") {
  SamplePlan plan;
  const VerificationReport prudf = verify_identity(*find_identity("ID-PRUDF"), plan);
  CHECK(prudf.verdict() == Verdict::Confirmed);
  CHECK(prudf.variants.front().draws.size() == plan.n_param_draws);
  const VerificationReport auf1 = verify_identity(*find_identity("ID-AUF1"), plan);
  int confirmed = 0;
  for (const VariantReport& v : auf1.variants) confirmed += v.verdict == Verdict::Confirmed;
  CHECK(confirmed <= 1);
  CHECK(auf1.confirmed_variant.value_or("") == "2+tau");
}

TEST_CASE("sampling is deterministic and independent of the policy") {
  SamplePlan plan;
  plan.n_param_draws = 6;
  for (const char* id : {"ID-HH1", "ID-HEUNHH-2", "ID-ELLE", "ID-HHH1"}) {
    const Identity& e = *find_identity(id);
    const auto serial = verify_identity(e, plan, ExecPolicy::Serial);
    const auto parallel = verify_identity(e, plan, ExecPolicy::Parallel);
    const auto again = verify_identity(e, plan, ExecPolicy::Parallel);
    CHECK(report_to_json(serial).dump() == report_to_json(parallel).dump());
    CHECK(report_to_json(parallel).dump() == report_to_json(again).dump());
  }
  plan.rng_seed = 7;
  const auto a = draw_parameters(*find_identity("ID-F12"), plan);
  plan.rng_seed = 8;
  const auto b = draw_parameters(*find_identity("ID-F12"), plan);
  CHECK(a.front().params != b.front().params);
}

TEST_CASE("plan validation and empty plans") {
  SamplePlan plan;
  CHECK_NOTHROW(plan.validate());
  plan.n_param_draws = 0;
  CHECK_THROWS_AS(plan.validate(), ConfigError);
  plan = SamplePlan{};
  plan.refute_factor = 1.0;
  CHECK_THROWS_AS(plan.validate(), ConfigError);
  plan = SamplePlan{};
  plan.tol_quad = 0.0;
  CHECK_THROWS_AS(plan.validate(), ConfigError);
  plan = SamplePlan{};
  plan.param_ranges["alpha"] = {"alpha", 1.0, 1.0, {}};  // HFE excludes alpha = 1
  CHECK_THROWS_AS(draw_parameters(*find_identity("ID-HFE"), plan), EmptyPlanError);
}

TEST_CASE("plan files") {
  const std::string js = "/tmp/heunref_plan_test.json", tm = "/tmp/heunref_plan_test.toml";
  std::ofstream(js) << R"({"plan": {"draws": 5, "seed": 9, "tol": 1e-7, "param_ranges": {"alpha": [0.3, 0.4]}}})";
  const SamplePlan a = load_plan_file(js);
  CHECK(a.n_param_draws == 5);
  CHECK(a.rng_seed == 9);
  CHECK(a.tol_quad == 1e-7);
  CHECK(a.param_ranges.at("alpha").hi == 0.4);
  std::ofstream(tm) << "# sweep\n[plan]\nn_param_draws = 3\nrefute_factor = 500\n";
  const SamplePlan b = load_plan_file(tm);
  CHECK(b.n_param_draws == 3);
  CHECK(b.refute_factor == 500.0);
  std::ofstream(tm) << "draws = many\n";
  CHECK_THROWS_AS(load_plan_file(tm), ConfigError);
  std::ofstream(js) << R"({"bogus": 1})";
  CHECK_THROWS_AS(load_plan_file(js), ConfigError);
  CHECK_THROWS_AS(load_plan_file("/tmp/heunref_plan_test.yaml"), ConfigError);
  std::remove(js.c_str());
  std::remove(tm.c_str());
}

TEST_CASE("report serialization") {
  SamplePlan plan;
  plan.n_param_draws = 3;
  const auto r = verify_identity(*find_identity("ID-ELLE"), plan);
  const nlohmann::json j = report_to_json(r);
  CHECK(j.at("identity") == "ID-ELLE");
  CHECK(j.at("verdict") == "REFUTED");
  CHECK(j.at("confirmed_variant") == "h=E(x)");
  CHECK(j.at("draws").size() == 3);
  for (const auto& d : j.at("draws")) {
    CHECK(d.contains("params"));
    CHECK(d.at("interval").size() == 2);
    CHECK(d.at("max_residual").is_number());
    CHECK(d.at("quad_mismatch").is_number());
  }
  const std::string csv = reports_to_csv({r});
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 3 * 3);
  const nlohmann::json run = run_to_json(plan, {r}, 4);
  CHECK(run.at("header").contains("timestamp"));
  CHECK(run.at("reports").size() == 1);
}
