#include "infrank/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "infrank/errors.hpp"

namespace infrank {

namespace {

constexpr std::uint32_t kNever = std::numeric_limits<std::uint32_t>::max();

bool passes(std::size_t active, std::size_t degree, double theta, ActivationRule rule) {
    const double fraction = static_cast<double>(active) / static_cast<double>(degree);
    return rule == ActivationRule::AtLeast ? fraction >= theta : fraction > theta;
}

/// Smallest k in [0, degree] with passes(k, degree); kNever if none.
std::uint32_t required_active(std::size_t degree, double theta, ActivationRule rule) {
    if (degree == 0) return kNever;
    const double guess = std::ceil(theta * static_cast<double>(degree));
    std::size_t k = guess <= 0.0 ? 0 : std::min<std::size_t>(degree, static_cast<std::size_t>(guess));
    while (k > 0 && passes(k - 1, degree, theta, rule)) --k;
    while (k <= degree && !passes(k, degree, theta, rule)) ++k;
    return k > degree ? kNever : static_cast<std::uint32_t>(k);
}

void check_seeds(std::span<const NodeId> seeds, std::size_t n) {
    for (NodeId s : seeds) {
        if (s >= n) {
            throw ValidationError("seed index " + std::to_string(s) + " out of range [0, " +
                                  std::to_string(n) + ")");
        }
    }
}

/// Advances an epoch counter over stamp arrays; clears them on wrap-around.
void next_epoch(std::uint32_t& epoch, std::vector<std::uint32_t>& a) {
    if (++epoch == 0) {
        std::fill(a.begin(), a.end(), 0u);
        epoch = 1;
    }
}

}  // namespace

void validate(const ThresholdAssignment& theta, std::size_t n) {
    if (theta.values.size() != n) {
        throw ValidationError("threshold assignment has " + std::to_string(theta.values.size()) +
                              " values for a graph of " + std::to_string(n) + " nodes");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double v = theta.values[i];
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ValidationError("threshold " + std::to_string(v) + " at node " + std::to_string(i) +
                                  " outside [0, 1]");
        }
    }
}

LinearThreshold::LinearThreshold(const Graph& g, const ThresholdAssignment& theta, ActivationRule rule)
    : graph_(&g) {
    validate(theta, g.node_count());
    need_.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        need_[v] = required_active(g.degree(v), theta.values[v], rule);
        if (need_[v] == 0) free_riders_.push_back(v);
    }
}

void LinearThreshold::Workspace::prepare(std::size_t n) {
    if (active_mark.size() != n) {
        active_mark.assign(n, 0);
        count_mark.assign(n, 0);
        count.assign(n, 0);
        epoch = 0;
    }
    if (++epoch == 0) {
        std::fill(active_mark.begin(), active_mark.end(), 0u);
        std::fill(count_mark.begin(), count_mark.end(), 0u);
        epoch = 1;
    }
    frontier.clear();
    next.clear();
}

template <class OnStep>
std::size_t LinearThreshold::run(std::span<const NodeId> seeds, Workspace& ws, OnStep&& on_step) const {
    const Graph& g = *graph_;
    check_seeds(seeds, g.node_count());
    ws.prepare(g.node_count());
    const std::uint32_t epoch = ws.epoch;

    for (NodeId s : seeds) {
        if (ws.active_mark[s] != epoch) {
            ws.active_mark[s] = epoch;
            ws.frontier.push_back(s);
        }
    }
    std::size_t total = ws.frontier.size();
    on_step(std::size_t{0}, ws.frontier);

    for (NodeId v : free_riders_) {
        if (ws.active_mark[v] != epoch) ws.next.push_back(v);
    }

    for (std::size_t step = 1;; ++step) {
        for (NodeId u : ws.frontier) {
            for (NodeId v : g.neighbors(u)) {
                if (ws.active_mark[v] == epoch) continue;
                if (ws.count_mark[v] != epoch) {
                    ws.count_mark[v] = epoch;
                    ws.count[v] = 0;
                }
                // Pushed exactly once: at the moment the count reaches the requirement.
                if (++ws.count[v] == need_[v]) ws.next.push_back(v);
            }
        }
        if (ws.next.empty()) break;
        for (NodeId v : ws.next) ws.active_mark[v] = epoch;
        total += ws.next.size();
        on_step(step, ws.next);
        std::swap(ws.frontier, ws.next);
        ws.next.clear();
    }
    return total;
}

std::size_t LinearThreshold::spread_size(std::span<const NodeId> seeds, Workspace& ws) const {
    return run(seeds, ws, [](std::size_t, const std::vector<NodeId>&) {});
}

SpreadResult LinearThreshold::spread(std::span<const NodeId> seeds, Workspace& ws) const {
    SpreadResult result;
    run(seeds, ws, [&](std::size_t step, const std::vector<NodeId>& activated) {
        auto& layer = result.trace.emplace_back(activated);
        std::sort(layer.begin(), layer.end());
        result.steps = step;
    });
    for (const auto& layer : result.trace) result.active.insert(result.active.end(), layer.begin(), layer.end());
    std::sort(result.active.begin(), result.active.end());
    return result;
}

SpreadResult lt_spread(const Graph& g, std::span<const NodeId> seeds, const ThresholdAssignment& theta,
                       ActivationRule rule) {
    const LinearThreshold engine(g, theta, rule);
    LinearThreshold::Workspace ws;
    return engine.spread(seeds, ws);
}

IndependentCascade::IndependentCascade(const Graph& g, double p) : graph_(&g), p_(p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("activation probability " + std::to_string(p) + " outside [0, 1]");
    }
}

std::size_t IndependentCascade::spread_size(std::span<const NodeId> seeds, Rng& rng, Workspace& ws) const {
    const Graph& g = *graph_;
    check_seeds(seeds, g.node_count());
    if (ws.mark.size() != g.node_count()) {
        ws.mark.assign(g.node_count(), 0);
        ws.epoch = 0;
    }
    next_epoch(ws.epoch, ws.mark);
    const std::uint32_t epoch = ws.epoch;

    ws.queue.clear();
    for (NodeId s : seeds) {
        if (ws.mark[s] != epoch) {
            ws.mark[s] = epoch;
            ws.queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < ws.queue.size(); ++head) {
        const NodeId u = ws.queue[head];
        for (NodeId v : g.out_neighbors(u)) {
            if (ws.mark[v] == epoch) continue;
            if (uniform01(rng) < p_) {
                ws.mark[v] = epoch;
                ws.queue.push_back(v);
            }
        }
    }
    return ws.queue.size();
}

std::vector<NodeId> IndependentCascade::spread(std::span<const NodeId> seeds, Rng& rng, Workspace& ws) const {
    spread_size(seeds, rng, ws);
    std::vector<NodeId> active = ws.queue;
    std::sort(active.begin(), active.end());
    return active;
}

std::vector<NodeId> ic_spread(const Graph& g, std::span<const NodeId> seeds, double p, Rng& rng) {
    const IndependentCascade engine(g, p);
    IndependentCascade::Workspace ws;
    return engine.spread(seeds, rng, ws);
}

void write_trace(const Graph& g, const SpreadResult& result, std::ostream& out) {
    for (std::size_t step = 0; step < result.trace.size(); ++step) {
        out << step;
        for (NodeId v : result.trace[step]) out << '\t' << g.original_id(v);
        out << '\n';
    }
}

}  // namespace infrank
