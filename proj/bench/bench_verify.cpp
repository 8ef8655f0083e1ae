// Serial vs OpenMP verification of single identities and the full catalog.

#include <benchmark/benchmark.h>

#include "heunref/catalog/catalog.hpp"
#include "heunref/verifier/verify.hpp"

using namespace heunref;

namespace {

void verify_one(benchmark::State& state, const char* id, ExecPolicy policy) {
  const Identity* e = find_identity(id);
  SamplePlan plan;
  plan.n_param_draws = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_identity(*e, plan, policy));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void verify_catalog(benchmark::State& state, ExecPolicy policy) {
  const SamplePlan plan;
  for (auto _ : state)
    for (const Identity& e : catalog()) benchmark::DoNotOptimize(verify_identity(e, plan, policy));
}

}  // namespace

BENCHMARK_CAPTURE(verify_one, hh1_serial, "ID-HH1", ExecPolicy::Serial)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verify_one, hh1_parallel, "ID-HH1", ExecPolicy::Parallel)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verify_one, heunhh2_serial, "ID-HEUNHH-2", ExecPolicy::Serial)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verify_one, heunhh2_parallel, "ID-HEUNHH-2", ExecPolicy::Parallel)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verify_catalog, serial, ExecPolicy::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verify_catalog, parallel, ExecPolicy::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
