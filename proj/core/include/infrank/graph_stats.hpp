#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "infrank/graph.hpp"
#include "infrank/parallel.hpp"

namespace infrank {

enum class ClusteringMode {
    /// C_i = links among N(i) / (d_i (d_i - 1) / 2), on the undirected view of
    /// the graph. Matches the published SNAP dataset statistics.
    UndirectedView,
    /// C_i = arcs among N(i) / (d_i (d_i - 1)); differs from UndirectedView only
    /// on directed graphs.
    DirectedArcs,
};

/// Mean of local clustering coefficients over all n nodes; nodes with fewer
/// than two neighbors contribute 0.
double average_clustering(const Graph& g, ClusteringMode mode = ClusteringMode::UndirectedView,
                          Parallelism par = {});

/// Core number of every node, by minimum-degree peeling on |N(i)|.
std::vector<std::uint32_t> core_numbers(const Graph& g);

struct MainCore {
    std::uint32_t k = 0;
    std::vector<NodeId> members;  // ascending
};

/// The nonempty k-core with the largest k.
MainCore main_core(const Graph& g);

/// Unit-length diameter of the undirected view. When the graph is disconnected,
/// `value` is the diameter of the largest (weakly) connected component.
struct Diameter {
    std::uint32_t value = 0;
    bool connected = true;
    std::size_t component_size = 0;

    /// "7", or "inf(17)" for a disconnected graph.
    std::string to_string() const;
    friend bool operator==(const Diameter&, const Diameter&) = default;
};

/// Exact: one BFS per node of the component, O(n (n + m)).
Diameter diameter(const Graph& g, Parallelism par = {});

/// Weakly connected component label per node; labels are dense, ordered by
/// smallest member.
std::vector<std::uint32_t> connected_components(const Graph& g);

struct GraphStats {
    std::size_t n = 0;
    /// Input edges as given, self-loops included.
    std::size_t m = 0;
    bool directed = false;
    bool weighted = false;
    double acc = 0.0;
    Diameter diameter;
    std::uint32_t main_core_k = 0;
    std::size_t main_core_size = 0;
};

GraphStats compute_stats(const Graph& g, Parallelism par = {});

}  // namespace infrank
