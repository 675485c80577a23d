#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace infrank {

/// Dense node index in [0, n).
using NodeId = std::uint32_t;
/// Node identifier as it appears in the input file.
using OriginalId = std::int64_t;

struct LoadOptions {
    bool directed = false;
    bool weighted = false;
};

/// One input edge in original-ID space.
struct Edge {
    OriginalId source = 0;
    OriginalId target = 0;
    double weight = 1.0;
};

/// Immutable graph in compressed sparse row form.
///
/// Dense indices follow ascending original ID, so "ascending original ID" and
/// "ascending index" are the same order. Undirected graphs store each edge as
/// two arcs; in- and out-adjacency then coincide. Self-loops are not stored
/// (they are counted in self_loop_count()) and parallel edges are collapsed,
/// keeping the first weight seen.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from edges in original-ID space. Throws ValidationError on
    /// an empty edge list or a negative weight.
    static Graph from_edges(std::span<const Edge> edges, LoadOptions options);

    std::size_t node_count() const noexcept { return ids_.size(); }
    /// Distinct loop-free input edges: arcs for directed graphs, unordered
    /// pairs for undirected ones.
    std::size_t edge_count() const noexcept { return edge_count_; }
    /// Distinct self-loops present in the input (dropped from adjacency).
    std::size_t self_loop_count() const noexcept { return self_loops_; }
    /// Stored arcs; equals edge_count() when directed, 2 * edge_count() otherwise.
    std::size_t arc_count() const noexcept { return out_.targets.size(); }

    bool directed() const noexcept { return directed_; }
    bool weighted() const noexcept { return weighted_; }

    std::span<const NodeId> out_neighbors(NodeId i) const noexcept { return out_.row(i); }
    std::span<const NodeId> in_neighbors(NodeId i) const noexcept { return in_.row(i); }
    /// Union of in- and out-neighbors, sorted.
    std::span<const NodeId> neighbors(NodeId i) const noexcept { return nbr_.row(i); }
    /// Weights parallel to out_neighbors(i); all 1.0 for unweighted graphs.
    std::span<const double> out_weights(NodeId i) const noexcept;

    std::size_t out_degree(NodeId i) const noexcept { return out_.row(i).size(); }
    std::size_t degree(NodeId i) const noexcept { return nbr_.row(i).size(); }

    OriginalId original_id(NodeId i) const noexcept { return ids_[i]; }
    std::span<const OriginalId> original_ids() const noexcept { return ids_; }
    std::optional<NodeId> index_of(OriginalId id) const noexcept;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    struct Csr {
        std::vector<std::size_t> offsets{0};
        std::vector<NodeId> targets;

        std::span<const NodeId> row(NodeId i) const noexcept {
            return {targets.data() + offsets[i], targets.data() + offsets[i + 1]};
        }
        friend bool operator==(const Csr&, const Csr&) = default;
    };

    static Csr build_csr(std::size_t n, std::vector<std::pair<NodeId, NodeId>>& arcs);

    Csr out_;
    Csr in_;
    Csr nbr_;
    std::vector<double> out_weights_;
    std::vector<OriginalId> ids_;
    std::size_t edge_count_ = 0;
    std::size_t self_loops_ = 0;
    bool directed_ = false;
    bool weighted_ = false;
};

/// N(i): in- and out-neighbors of i. Throws ValidationError if i is out of range.
std::span<const NodeId> neighborhood(const Graph& g, NodeId i);
/// N+(i): successors of i. Throws ValidationError if i is out of range.
std::span<const NodeId> out_neighborhood(const Graph& g, NodeId i);

}  // namespace infrank
