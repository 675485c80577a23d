#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "infrank/graph.hpp"
#include "infrank/random.hpp"
#include "infrank/threshold_assignment.hpp"

namespace infrank {

/// Comparison used by the LT activation test |active ∩ N(i)| / |N(i)| ? theta(i).
enum class ActivationRule {
    AtLeast,  // >=
    Exceeds,  // >
};

struct SpreadResult {
    /// Final active set F(X), ascending.
    std::vector<NodeId> active;
    /// trace[0] = X; trace[t] = nodes first active at step t. Each ascending.
    std::vector<std::vector<NodeId>> trace;
    /// Number of steps that activated at least one node.
    std::size_t steps = 0;
};

/// Linear Threshold spread bound to one graph and one threshold assignment.
///
/// Rounds are synchronous: at step t+1 every inactive node whose fraction of
/// active neighbors (in the current F_t) passes its threshold activates at once.
/// Nodes with an empty neighborhood are only ever active when seeded. A node
/// with theta = 0 and at least one neighbor activates in the first step under
/// AtLeast.
///
/// Work per spread is proportional to the total degree of activated nodes.
/// The engine is immutable; concurrent spreads each need their own Workspace.
class LinearThreshold {
public:
    LinearThreshold(const Graph& g, const ThresholdAssignment& theta,
                    ActivationRule rule = ActivationRule::AtLeast);

    /// Reusable scratch space for one thread.
    class Workspace {
    public:
        Workspace() = default;

    private:
        friend class LinearThreshold;
        void prepare(std::size_t n);

        std::vector<std::uint32_t> active_mark;
        std::vector<std::uint32_t> count_mark;
        std::vector<std::uint32_t> count;
        std::uint32_t epoch = 0;
        std::vector<NodeId> frontier;
        std::vector<NodeId> next;
    };

    /// |F(seeds)|. Seeds may repeat; each must be a valid index.
    std::size_t spread_size(std::span<const NodeId> seeds, Workspace& ws) const;

    SpreadResult spread(std::span<const NodeId> seeds, Workspace& ws) const;

    const Graph& graph() const noexcept { return *graph_; }

private:
    template <class OnActivate>
    std::size_t run(std::span<const NodeId> seeds, Workspace& ws, OnActivate&& on_step) const;

    const Graph* graph_;
    /// Active neighbors needed to activate; kNever if unreachable.
    std::vector<std::uint32_t> need_;
    /// Nodes with need_ == 0: they activate in step 1 unconditionally.
    std::vector<NodeId> free_riders_;
};

/// Convenience single-shot LT spread. Throws ValidationError on a bad seed or
/// a threshold assignment of the wrong length or range.
SpreadResult lt_spread(const Graph& g, std::span<const NodeId> seeds, const ThresholdAssignment& theta,
                       ActivationRule rule = ActivationRule::AtLeast);

/// Independent Cascade with a uniform arc probability, reusable across calls.
class IndependentCascade {
public:
    /// Throws ValidationError if p is not in [0, 1].
    IndependentCascade(const Graph& g, double p);

    class Workspace {
    public:
        Workspace() = default;

    private:
        friend class IndependentCascade;
        std::vector<std::uint32_t> mark;
        std::uint32_t epoch = 0;
        std::vector<NodeId> queue;
    };

    /// Number of nodes active at the end, seeds included.
    std::size_t spread_size(std::span<const NodeId> seeds, Rng& rng, Workspace& ws) const;
    std::vector<NodeId> spread(std::span<const NodeId> seeds, Rng& rng, Workspace& ws) const;

private:
    const Graph* graph_;
    double p_;
};

/// Independent Cascade: each newly active node makes one attempt per out-arc,
/// succeeding with probability p. Nodes are processed in activation order and
/// arcs in ascending target order, so the result is a function of the rng state.
/// Returns the final active set, ascending. Throws ValidationError if p is not
/// in [0, 1] or a seed is out of range.
std::vector<NodeId> ic_spread(const Graph& g, std::span<const NodeId> seeds, double p, Rng& rng);

/// One line per step: step index, then the sorted original IDs activated in it,
/// tab-separated.
void write_trace(const Graph& g, const SpreadResult& result, std::ostream& out);

}  // namespace infrank
