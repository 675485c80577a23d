#include <benchmark/benchmark.h>

#include <sstream>

#include "infrank/graph_io.hpp"
#include "infrank/graph_stats.hpp"
#include "synthetic.hpp"

using namespace infrank;

namespace {

void BM_LoadEdgeList(benchmark::State& state) {
    const Graph g = bench::preferential_attachment(state.range(0), 4, false, 8);
    std::ostringstream text;
    write_edge_list(g, text);
    const std::string data = text.str();
    for (auto _ : state) {
        std::istringstream in(data);
        benchmark::DoNotOptimize(load_edge_list(in, {}));
    }
    state.SetBytesProcessed(state.iterations() * std::int64_t(data.size()));
}
BENCHMARK(BM_LoadEdgeList)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_Clustering(benchmark::State& state) {
    const Graph g = bench::preferential_attachment(50000, 5, false, 9);
    for (auto _ : state) benchmark::DoNotOptimize(average_clustering(g));
}
BENCHMARK(BM_Clustering)->Unit(benchmark::kMillisecond);

void BM_Diameter(benchmark::State& state) {
    const Graph g = bench::preferential_attachment(state.range(0), 2, false, 10);
    for (auto _ : state) benchmark::DoNotOptimize(diameter(g, Parallelism{0}));
}
BENCHMARK(BM_Diameter)->Arg(5000)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CoreNumbers(benchmark::State& state) {
    const Graph g = bench::preferential_attachment(100000, 4, false, 11);
    for (auto _ : state) benchmark::DoNotOptimize(core_numbers(g));
}
BENCHMARK(BM_CoreNumbers)->Unit(benchmark::kMillisecond);

}  // namespace
