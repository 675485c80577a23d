#pragma once

#include <random>
#include <vector>

#include "infrank/graph.hpp"

namespace infrank::bench {

/// Preferential attachment, `m` edges per new node; heavy-tailed degrees like
/// the social graphs the measures are meant for.
inline Graph preferential_attachment(std::size_t n, std::size_t m, bool directed, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::vector<OriginalId> ends;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t k = 0; k < std::min(m, v); ++k) {
            const OriginalId u = ends.empty() ? 0 : ends[rng() % ends.size()];
            edges.push_back({OriginalId(v), u, 1.0});
            ends.push_back(u);
            ends.push_back(OriginalId(v));
        }
    }
    return Graph::from_edges(edges, {directed, false});
}

}  // namespace infrank::bench
