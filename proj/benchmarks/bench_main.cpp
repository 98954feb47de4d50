#include <benchmark/benchmark.h>

#include "graphconf/builtin_graphs.hpp"
#include "graphconf/discrete_config.hpp"
#include "graphconf/intersection_form.hpp"
#include "graphconf/relative_complex.hpp"
#include "graphconf/report.hpp"

using namespace graphconf;

namespace {

void BM_BuildDiscreteConfig(benchmark::State& state) {
    GraphInput input = builtin::wheel_ring(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        DiscreteConfigComplex d = build_discrete_config(input.graph);
        benchmark::DoNotOptimize(d.boundary2);
    }
}
BENCHMARK(BM_BuildDiscreteConfig)->Arg(4)->Arg(6)->Arg(8);

void BM_SmithRankBoundary2(benchmark::State& state) {
    GraphInput input = builtin::wheel_ring(static_cast<unsigned>(state.range(0)));
    DiscreteConfigComplex d = build_discrete_config(input.graph);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(d.boundary2));
    }
}
BENCHMARK(BM_SmithRankBoundary2)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_HomologyOracleK5(benchmark::State& state) {
    GraphInput input = builtin::k5();
    DiscreteConfigComplex d = build_discrete_config(input.graph);
    for (auto _ : state) {
        HomologySummary h = homology_oracle(d);
        benchmark::DoNotOptimize(h.betti);
    }
}
BENCHMARK(BM_HomologyOracleK5)->Unit(benchmark::kMillisecond);

void BM_IntersectionRoute(benchmark::State& state) {
    GraphInput input = builtin::wheel_ring(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        RelativeComplex n = build_relative_complex(input.graph);
        RelativeH2 h2 = relative_h2(n);
        CycleBasis basis = fundamental_cycle_basis(input.graph);
        IntersectionMatrix im = build_intersection_matrix(input.graph, basis, n, h2);
        ConfigHomologyReport r = config_homology(input.graph, im);
        benchmark::DoNotOptimize(r.b1);
    }
}
BENCHMARK(BM_IntersectionRoute)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FullCheck(benchmark::State& state) {
    GraphInput input = builtin::wheel_ring(static_cast<unsigned>(state.range(0)));
    RunOptions options;
    options.command = "check";
    options.basis = "faces";
    for (auto _ : state) {
        RunReport report = run_command(input, options);
        benchmark::DoNotOptimize(report.checks);
    }
}
BENCHMARK(BM_FullCheck)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
