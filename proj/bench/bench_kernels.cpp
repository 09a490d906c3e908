// Serial reference vs OpenMP kernels. Arg 0 of each parallel benchmark is the
// worker count.

#include "dpe/graph.hpp"
#include "dpe/kernels.hpp"
#include "dpe/pareto.hpp"

#include <benchmark/benchmark.h>

using namespace dpe;

namespace {

const DistanceMatrix& wheel(int n) {
    static const DistanceMatrix w14 = distance_matrix(make_family("wheel", {14}));
    static const DistanceMatrix w18 = distance_matrix(make_family("wheel", {18}));
    return n == 14 ? w14 : w18;
}

void BM_EnumerateSerial(benchmark::State& state) {
    const auto& dm = wheel(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::enumerate_serial(dm, kDedupTolerance));
}
BENCHMARK(BM_EnumerateSerial)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_EnumerateParallel(benchmark::State& state) {
    const auto& dm = wheel(static_cast<int>(state.range(1)));
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::enumerate_parallel(dm, kDedupTolerance, jobs));
}
BENCHMARK(BM_EnumerateParallel)->ArgsProduct({{1, 2, 4}, {14, 18}})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_MaxCountSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::max_count_serial(5, kDedupTolerance));
}
BENCHMARK(BM_MaxCountSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_MaxCountParallel(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::max_count_parallel(5, kDedupTolerance, jobs));
}
BENCHMARK(BM_MaxCountParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_TreesSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::unique_trees_serial(8));
}
BENCHMARK(BM_TreesSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_TreesParallel(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::unique_trees_parallel(8, jobs));
}
BENCHMARK(BM_TreesParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
