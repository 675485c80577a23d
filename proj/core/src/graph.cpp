#include "infrank/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "infrank/errors.hpp"

namespace infrank {

namespace {

struct DenseEdge {
    NodeId source;
    NodeId target;
    double weight;
};

}  // namespace

Graph::Csr Graph::build_csr(std::size_t n, std::vector<std::pair<NodeId, NodeId>>& arcs) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    Csr csr;
    csr.offsets.assign(n + 1, 0);
    for (const auto& [s, t] : arcs) ++csr.offsets[s + 1];
    std::partial_sum(csr.offsets.begin(), csr.offsets.end(), csr.offsets.begin());
    csr.targets.reserve(arcs.size());
    for (const auto& arc : arcs) csr.targets.push_back(arc.second);
    return csr;
}

Graph Graph::from_edges(std::span<const Edge> edges, LoadOptions options) {
    if (edges.empty()) throw ValidationError("empty graph: no edges");

    for (const Edge& e : edges) {
        if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
            throw ValidationError("invalid edge weight " + std::to_string(e.weight) + " on edge " +
                                  std::to_string(e.source) + " -> " + std::to_string(e.target));
        }
    }

    Graph g;
    g.directed_ = options.directed;
    g.weighted_ = options.weighted;

    g.ids_.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
        g.ids_.push_back(e.source);
        g.ids_.push_back(e.target);
    }
    std::sort(g.ids_.begin(), g.ids_.end());
    g.ids_.erase(std::unique(g.ids_.begin(), g.ids_.end()), g.ids_.end());
    g.ids_.shrink_to_fit();
    const std::size_t n = g.ids_.size();

    auto dense = [&](OriginalId id) {
        return static_cast<NodeId>(std::lower_bound(g.ids_.begin(), g.ids_.end(), id) - g.ids_.begin());
    };

    std::vector<DenseEdge> kept;
    std::vector<NodeId> loops;
    kept.reserve(edges.size());
    for (const Edge& e : edges) {
        NodeId s = dense(e.source);
        NodeId t = dense(e.target);
        if (s == t) {
            loops.push_back(s);
            continue;
        }
        if (!options.directed && t < s) std::swap(s, t);
        kept.push_back({s, t, options.weighted ? e.weight : 1.0});
    }
    std::sort(loops.begin(), loops.end());
    g.self_loops_ = static_cast<std::size_t>(std::unique(loops.begin(), loops.end()) - loops.begin());

    // First occurrence wins for duplicates.
    std::stable_sort(kept.begin(), kept.end(), [](const DenseEdge& a, const DenseEdge& b) {
        return std::tie(a.source, a.target) < std::tie(b.source, b.target);
    });
    kept.erase(std::unique(kept.begin(), kept.end(),
                           [](const DenseEdge& a, const DenseEdge& b) {
                               return a.source == b.source && a.target == b.target;
                           }),
               kept.end());
    g.edge_count_ = kept.size();

    std::vector<DenseEdge> arcs = kept;
    if (!options.directed) {
        arcs.reserve(kept.size() * 2);
        for (const DenseEdge& e : kept) arcs.push_back({e.target, e.source, e.weight});
        std::sort(arcs.begin(), arcs.end(), [](const DenseEdge& a, const DenseEdge& b) {
            return std::tie(a.source, a.target) < std::tie(b.source, b.target);
        });
    }

    std::vector<std::pair<NodeId, NodeId>> pairs;
    pairs.reserve(arcs.size() * 2);
    for (const DenseEdge& a : arcs) pairs.emplace_back(a.source, a.target);
    g.out_ = build_csr(n, pairs);
    g.out_weights_.reserve(arcs.size());
    for (const DenseEdge& a : arcs) g.out_weights_.push_back(a.weight);

    if (options.directed) {
        pairs.clear();
        for (const DenseEdge& a : arcs) pairs.emplace_back(a.target, a.source);
        g.in_ = build_csr(n, pairs);

        pairs.clear();
        for (const DenseEdge& a : arcs) {
            pairs.emplace_back(a.source, a.target);
            pairs.emplace_back(a.target, a.source);
        }
        g.nbr_ = build_csr(n, pairs);
    } else {
        g.in_ = g.out_;
        g.nbr_ = g.out_;
    }
    return g;
}

std::span<const double> Graph::out_weights(NodeId i) const noexcept {
    return {out_weights_.data() + out_.offsets[i], out_weights_.data() + out_.offsets[i + 1]};
}

std::optional<NodeId> Graph::index_of(OriginalId id) const noexcept {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<NodeId>(it - ids_.begin());
}

namespace {

void check_node(const Graph& g, NodeId i) {
    if (i >= g.node_count()) {
        throw ValidationError("node index " + std::to_string(i) + " out of range [0, " +
                              std::to_string(g.node_count()) + ")");
    }
}

}  // namespace

std::span<const NodeId> neighborhood(const Graph& g, NodeId i) {
    check_node(g, i);
    return g.neighbors(i);
}

std::span<const NodeId> out_neighborhood(const Graph& g, NodeId i) {
    check_node(g, i);
    return g.out_neighbors(i);
}

}  // namespace infrank
