#include <benchmark/benchmark.h>

#include "slc/certify.hpp"
#include "slc/construct.hpp"
#include "slc/formats.hpp"
#include "slc/solver.hpp"

namespace {

using namespace slc;

void BM_BaseTriangulation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(base_triangulation());
}
BENCHMARK(BM_BaseTriangulation);

void BM_EnumerateBase(benchmark::State& state) {
  const auto g = SLabeledGraph::all_identity(base_triangulation().to_simple_graph(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_colourings(g, 100));
}
BENCHMARK(BM_EnumerateBase);

void BM_Build(benchmark::State& state) {
  const auto which = static_cast<GadgetCase>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_gadget_instance(which));
  state.SetLabel(to_string(which));
}
BENCHMARK(BM_Build)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Second argument: 1 to split open vertices into components.
void BM_Solve(benchmark::State& state) {
  const auto which = static_cast<GadgetCase>(state.range(0));
  const auto built = build_gadget_instance(which);
  SolverOptions opts;
  opts.decompose = state.range(1) != 0;
  SolveStats last;
  for (auto _ : state) {
    const auto r = solve(built.instance, opts);
    last = r.stats;
    benchmark::DoNotOptimize(r);
  }
  state.counters["nodes"] = static_cast<double>(last.nodes);
  state.counters["splits"] = static_cast<double>(last.splits);
  state.SetLabel(std::string(to_string(which)) + (opts.decompose ? "" : " no-decompose"));
}
BENCHMARK(BM_Solve)->Args({0, 1})->Args({1, 1})->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  const auto built = build_gadget_instance(static_cast<GadgetCase>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(make_certificate(built.instance, built.provenance));
}
BENCHMARK(BM_Certify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const auto built = build_gadget_instance(static_cast<GadgetCase>(state.range(0)));
  const auto cert = make_certificate(built.instance, built.provenance);
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(cert, built.instance));
}
BENCHMARK(BM_Verify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EncodeDecode(benchmark::State& state) {
  const auto built = build_c1234();
  for (auto _ : state) benchmark::DoNotOptimize(decode_instance(encode(built)));
}
BENCHMARK(BM_EncodeDecode)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
