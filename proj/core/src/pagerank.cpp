#include <cmath>
#include <string>
#include <vector>

#include "infrank/centrality.hpp"
#include "infrank/errors.hpp"

namespace infrank {

RankVector pagerank(const Graph& g, PageRankOptions options) {
    if (!(options.alpha > 0.0 && options.alpha <= 1.0)) {
        throw ValidationError("PageRank alpha must be in (0, 1], got " + std::to_string(options.alpha));
    }
    if (!(options.tol > 0.0)) throw ValidationError("PageRank tolerance must be positive");

    const std::size_t n = g.node_count();
    const double inv_n = 1.0 / static_cast<double>(n);
    const double alpha = options.alpha;

    RankVector r;
    r.measure = Measure::PageRank;
    r.params = "alpha=" + std::to_string(alpha);
    r.values.assign(n, inv_n);
    r.converged = false;

    std::vector<double> share(n);
    std::vector<double> next(n);
    for (std::size_t iter = 1; iter <= options.max_iter; ++iter) {
        double dangling = 0.0;
        for (NodeId j = 0; j < n; ++j) {
            const std::size_t out = g.out_degree(j);
            if (out == 0) {
                dangling += r.values[j];
                share[j] = 0.0;
            } else {
                share[j] = r.values[j] / static_cast<double>(out);
            }
        }
        const double base = (1.0 - alpha) * inv_n + alpha * dangling * inv_n;

        double change = 0.0;
        for (NodeId i = 0; i < n; ++i) {
            double in = 0.0;
            for (NodeId j : g.in_neighbors(i)) in += share[j];
            next[i] = base + alpha * in;
            change += std::abs(next[i] - r.values[i]);
        }
        r.values.swap(next);
        r.iterations = iter;
        if (change < options.tol) {
            r.converged = true;
            break;
        }
    }
    return r;
}

}  // namespace infrank
