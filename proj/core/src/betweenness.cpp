#include <algorithm>
#include <limits>
#include <vector>

#include "infrank/centrality.hpp"

namespace infrank {

namespace {

// Sources are split into a fixed number of contiguous blocks, each summed on
// its own and then combined in block order. The floating-point result is thus
// the same for every thread count.
constexpr std::size_t kSourceBlocks = 32;

struct BrandesScratch {
    std::vector<std::int64_t> dist;
    std::vector<double> sigma;
    std::vector<double> delta;
    std::vector<NodeId> order;

    explicit BrandesScratch(std::size_t n) : dist(n, -1), sigma(n, 0.0), delta(n, 0.0) {
        order.reserve(n);
    }
};

void accumulate_from(const Graph& g, NodeId s, BrandesScratch& w, std::vector<double>& bc) {
    auto& order = w.order;
    order.clear();
    order.push_back(s);
    w.dist[s] = 0;
    w.sigma[s] = 1.0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const NodeId u = order[head];
        for (NodeId v : g.out_neighbors(u)) {
            if (w.dist[v] < 0) {
                w.dist[v] = w.dist[u] + 1;
                order.push_back(v);
            }
            if (w.dist[v] == w.dist[u] + 1) w.sigma[v] += w.sigma[u];
        }
    }

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId x = *it;
        const double coeff = (1.0 + w.delta[x]) / w.sigma[x];
        for (NodeId v : g.in_neighbors(x)) {
            if (w.dist[v] >= 0 && w.dist[v] == w.dist[x] - 1) w.delta[v] += w.sigma[v] * coeff;
        }
        if (x != s) bc[x] += w.delta[x];
    }

    for (NodeId v : order) {
        w.dist[v] = -1;
        w.sigma[v] = 0.0;
        w.delta[v] = 0.0;
    }
}

}  // namespace

RankVector betweenness(const Graph& g, BetweennessOptions options, Parallelism par) {
    const std::size_t n = g.node_count();
    const std::size_t blocks = std::min(kSourceBlocks, std::max<std::size_t>(n, 1));
    std::vector<std::vector<double>> partial(blocks, std::vector<double>(n, 0.0));

    const unsigned workers = worker_count(blocks, par);
    std::vector<BrandesScratch> scratch;
    scratch.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) scratch.emplace_back(n);

    parallel_for(blocks, par, [&](std::size_t b, unsigned worker) {
        const std::size_t begin = n * b / blocks;
        const std::size_t end = n * (b + 1) / blocks;
        for (std::size_t s = begin; s < end; ++s) {
            accumulate_from(g, static_cast<NodeId>(s), scratch[worker], partial[b]);
        }
    });

    RankVector r;
    r.measure = Measure::Betweenness;
    r.values.assign(n, 0.0);
    for (const auto& block : partial) {
        for (std::size_t i = 0; i < n; ++i) r.values[i] += block[i];
    }

    double scale = 1.0;
    const double pairs = n > 2 ? static_cast<double>(n - 1) * static_cast<double>(n - 2) : 0.0;
    switch (options.normalization) {
        case BetweennessNormalization::OrderedPairs:
            scale = pairs > 0.0 ? 1.0 / pairs : 0.0;
            r.params = "normalization=ordered";
            break;
        case BetweennessNormalization::UnorderedPairs:
            scale = pairs > 0.0 ? 2.0 / pairs : 0.0;
            r.params = "normalization=unordered";
            break;
        case BetweennessNormalization::None:
            r.params = "normalization=none";
            break;
    }
    if (scale != 1.0) {
        for (double& v : r.values) v *= scale;
    }
    return r;
}

}  // namespace infrank
