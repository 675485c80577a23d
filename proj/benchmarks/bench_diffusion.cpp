#include <benchmark/benchmark.h>

#include "infrank/centrality.hpp"
#include "infrank/diffusion.hpp"
#include "infrank/thresholds.hpp"
#include "synthetic.hpp"

using namespace infrank;

namespace {

void BM_LtSpreadSingleSeed(benchmark::State& state) {
    const Graph g = bench::preferential_attachment(state.range(0), 3, false, 1);
    const LinearThreshold engine(g, uniform_thresholds(g, 0.25));
    LinearThreshold::Workspace ws;
    NodeId seed = 0;
    std::size_t activated = 0;
    for (auto _ : state) {
        const NodeId s = seed++ % g.node_count();
        activated += engine.spread_size(std::span<const NodeId>(&s, 1), ws);
    }
    state.counters["mean_spread"] = benchmark::Counter(double(activated), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_LtSpreadSingleSeed)->Arg(10000)->Arg(100000);

void BM_Fltr(benchmark::State& state) {
    const Graph g = bench::preferential_attachment(state.range(0), 3, true, 2);
    const auto theta = uniform_thresholds(g, 0.5);
    const Parallelism par{unsigned(state.range(1))};
    for (auto _ : state) benchmark::DoNotOptimize(fltr(g, theta, par));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Fltr)->Args({5000, 1})->Args({5000, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_FltrSampled(benchmark::State& state) {
    const Graph g = bench::preferential_attachment(5000, 3, false, 3);
    const auto scheme = random_scheme(g, {0.0, 1.0, true}, 7);
    for (auto _ : state) benchmark::DoNotOptimize(fltr_sampled(g, scheme, state.range(0), Parallelism{0}));
}
BENCHMARK(BM_FltrSampled)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_IcSpread(benchmark::State& state) {
    const Graph g = bench::preferential_attachment(50000, 3, true, 4);
    const IndependentCascade ic(g, 0.05);
    IndependentCascade::Workspace ws;
    Rng rng(9);
    NodeId seed = 0;
    for (auto _ : state) {
        const NodeId s = seed++ % g.node_count();
        benchmark::DoNotOptimize(ic.spread_size(std::span<const NodeId>(&s, 1), rng, ws));
    }
}
BENCHMARK(BM_IcSpread);

}  // namespace
