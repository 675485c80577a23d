#include <benchmark/benchmark.h>

#include "infrank/centrality.hpp"
#include "synthetic.hpp"

using namespace infrank;

namespace {

void BM_Betweenness(benchmark::State& state) {
    const Graph g = bench::preferential_attachment(state.range(0), 3, false, 5);
    const Parallelism par{unsigned(state.range(1))};
    for (auto _ : state) benchmark::DoNotOptimize(betweenness(g, {}, par));
}
BENCHMARK(BM_Betweenness)->Args({2000, 1})->Args({2000, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_PageRank(benchmark::State& state) {
    const Graph g = bench::preferential_attachment(state.range(0), 5, true, 6);
    for (auto _ : state) benchmark::DoNotOptimize(pagerank(g));
}
BENCHMARK(BM_PageRank)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_Icr(benchmark::State& state) {
    const Graph g = bench::preferential_attachment(5000, 3, true, 7);
    for (auto _ : state) benchmark::DoNotOptimize(icr(g, {0.01, std::size_t(state.range(0)), 1}, Parallelism{0}));
}
BENCHMARK(BM_Icr)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
