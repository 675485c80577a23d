#include "infrank/graph_stats.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace infrank {

double average_clustering(const Graph& g, ClusteringMode mode, Parallelism par) {
    const std::size_t n = g.node_count();
    if (n == 0) return 0.0;

    const unsigned workers = worker_count(n, par);
    // mark[w][v] == i + 1 means v is in N(i) for the node worker w is on.
    std::vector<std::vector<std::uint32_t>> mark(workers, std::vector<std::uint32_t>(n, 0));
    std::vector<double> local(n, 0.0);

    parallel_for(n, par, [&](std::size_t idx, unsigned w) {
        const auto i = static_cast<NodeId>(idx);
        const auto nbrs = g.neighbors(i);
        const std::size_t d = nbrs.size();
        if (d < 2) return;
        auto& stamp = mark[w];
        const std::uint32_t tag = i + 1;
        for (NodeId j : nbrs) stamp[j] = tag;

        std::size_t links = 0;
        for (NodeId j : nbrs) {
            const auto adj = mode == ClusteringMode::UndirectedView ? g.neighbors(j) : g.out_neighbors(j);
            for (NodeId k : adj) links += stamp[k] == tag;
        }
        const double dd = static_cast<double>(d);
        if (mode == ClusteringMode::UndirectedView) {
            // Each link among neighbors was seen from both ends.
            local[i] = (static_cast<double>(links) / 2.0) / (dd * (dd - 1.0) / 2.0);
        } else {
            local[i] = static_cast<double>(links) / (dd * (dd - 1.0));
        }
    });

    return std::accumulate(local.begin(), local.end(), 0.0) / static_cast<double>(n);
}

std::vector<std::uint32_t> core_numbers(const Graph& g) {
    // Batagelj & Zaversnik bucket peeling, O(n + m).
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> deg(n);
    std::uint32_t max_deg = 0;
    for (NodeId v = 0; v < n; ++v) {
        deg[v] = static_cast<std::uint32_t>(g.degree(v));
        max_deg = std::max(max_deg, deg[v]);
    }

    std::vector<std::size_t> bin(max_deg + 2, 0);
    for (auto d : deg) ++bin[d];
    std::size_t start = 0;
    for (auto& b : bin) {
        const std::size_t count = b;
        b = start;
        start += count;
    }
    std::vector<NodeId> order(n);
    std::vector<std::size_t> pos(n);
    for (NodeId v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        order[pos[v]] = v;
    }
    for (std::size_t d = bin.size() - 1; d > 0; --d) bin[d] = bin[d - 1];
    bin[0] = 0;

    for (std::size_t idx = 0; idx < n; ++idx) {
        const NodeId v = order[idx];
        for (NodeId u : g.neighbors(v)) {
            if (deg[u] > deg[v]) {
                const std::uint32_t du = deg[u];
                const std::size_t pu = pos[u];
                const std::size_t pw = bin[du];
                const NodeId w = order[pw];
                if (u != w) {
                    order[pu] = w;
                    pos[w] = pu;
                    order[pw] = u;
                    pos[u] = pw;
                }
                ++bin[du];
                --deg[u];
            }
        }
    }
    return deg;
}

MainCore main_core(const Graph& g) {
    const auto core = core_numbers(g);
    MainCore result;
    if (core.empty()) return result;
    result.k = *std::max_element(core.begin(), core.end());
    for (NodeId v = 0; v < core.size(); ++v) {
        if (core[v] == result.k) result.members.push_back(v);
    }
    return result;
}

std::vector<std::uint32_t> connected_components(const Graph& g) {
    constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> label(n, kUnset);
    std::vector<NodeId> stack;
    std::uint32_t next = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (label[s] != kUnset) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            for (NodeId v : g.neighbors(u)) {
                if (label[v] == kUnset) {
                    label[v] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return label;
}

std::string Diameter::to_string() const {
    if (connected) return std::to_string(value);
    return "inf(" + std::to_string(value) + ")";
}

Diameter diameter(const Graph& g, Parallelism par) {
    const std::size_t n = g.node_count();
    Diameter result;
    if (n == 0) return result;

    const auto label = connected_components(g);
    const std::uint32_t components = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::size_t> sizes(components, 0);
    for (auto c : label) ++sizes[c];
    const auto largest =
        static_cast<std::uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

    std::vector<NodeId> members;
    members.reserve(sizes[largest]);
    for (NodeId v = 0; v < n; ++v) {
        if (label[v] == largest) members.push_back(v);
    }
    result.connected = components == 1;
    result.component_size = members.size();

    constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
    const unsigned workers = worker_count(members.size(), par);
    std::vector<std::vector<std::uint32_t>> dist(workers, std::vector<std::uint32_t>(n, kUnseen));
    std::vector<std::vector<NodeId>> queue(workers);
    std::vector<std::uint32_t> ecc(members.size(), 0);

    parallel_for(members.size(), par, [&](std::size_t idx, unsigned w) {
        auto& d = dist[w];
        auto& q = queue[w];
        q.clear();
        q.push_back(members[idx]);
        d[members[idx]] = 0;
        for (std::size_t head = 0; head < q.size(); ++head) {
            const NodeId u = q[head];
            for (NodeId v : g.neighbors(u)) {
                if (d[v] == kUnseen) {
                    d[v] = d[u] + 1;
                    q.push_back(v);
                }
            }
        }
        ecc[idx] = d[q.back()];
        for (NodeId v : q) d[v] = kUnseen;
    });

    result.value = *std::max_element(ecc.begin(), ecc.end());
    return result;
}

GraphStats compute_stats(const Graph& g, Parallelism par) {
    GraphStats s;
    s.n = g.node_count();
    s.m = g.edge_count() + g.self_loop_count();
    s.directed = g.directed();
    s.weighted = g.weighted();
    s.acc = average_clustering(g, ClusteringMode::UndirectedView, par);
    s.diameter = diameter(g, par);
    const auto core = main_core(g);
    s.main_core_k = core.k;
    s.main_core_size = core.members.size();
    return s;
}

}  // namespace infrank
