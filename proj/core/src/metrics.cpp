#include "infrank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>

#include "infrank/errors.hpp"

namespace infrank {

GiniResult gini(std::span<const double> values) {
    if (values.empty()) throw ValidationError("Gini coefficient of an empty list");
    std::vector<double> x(values.begin(), values.end());
    for (double v : x) {
        if (!(v >= 0.0)) throw ValidationError("Gini coefficient needs nonnegative values");
    }
    std::sort(x.begin(), x.end());

    const auto n = static_cast<double>(x.size());
    double total = 0.0;
    double weighted = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        total += x[i];
        // sum_ij |x_i - x_j| = 2 sum_i (2i - n - 1) x_(i), 1-based i, ascending order.
        weighted += (2.0 * static_cast<double>(i + 1) - n - 1.0) * x[i];
    }
    if (total == 0.0) return {0.0, true};
    return {std::clamp(weighted / (n * total), 0.0, 1.0), false};
}

std::vector<double> rank_keys(const RankVector& rank) {
    std::vector<double> keys(rank.size());
    if (rank.exact) {
        for (std::size_t i = 0; i < keys.size(); ++i) keys[i] = static_cast<double>(rank.exact->numerators[i]);
        return keys;
    }
    char buf[40];
    for (std::size_t i = 0; i < keys.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.11e", rank.values[i]);
        keys[i] = std::strtod(buf, nullptr);
    }
    return keys;
}

RankStats rank_stats(const RankVector& rank) {
    RankStats s;
    if (rank.size() == 0) throw ValidationError("statistics of an empty rank vector");
    const auto n = static_cast<double>(rank.size());
    const double mean = std::accumulate(rank.values.begin(), rank.values.end(), 0.0) / n;
    double sq = 0.0;
    for (double v : rank.values) sq += (v - mean) * (v - mean);
    s.sigma = std::sqrt(sq / n);

    auto keys = rank_keys(rank);
    std::sort(keys.begin(), keys.end());
    s.distinct = static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
    return s;
}

std::vector<NodeId> ranking_order(const Graph& g, const RankVector& rank) {
    const auto keys = rank_keys(rank);
    std::vector<NodeId> order(rank.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (keys[a] != keys[b]) return keys[a] > keys[b];
        return g.original_id(a) < g.original_id(b);
    });
    return order;
}

namespace {

void require_rank_size(const Graph& g, const RankVector& rank) {
    if (rank.size() != g.node_count()) {
        throw ValidationError("rank vector has " + std::to_string(rank.size()) + " values for a graph of " +
                              std::to_string(g.node_count()) + " nodes");
    }
}

void require_ten(const Graph& g, const char* metric) {
    if (g.node_count() < 10) {
        throw ValidationError(std::string(metric) + " requires n >= 10 (n = " + std::to_string(g.node_count()) +
                              ")");
    }
}

double fraction(std::size_t active, const Graph& g) {
    return static_cast<double>(active) / static_cast<double>(g.node_count());
}

std::span<const NodeId> top_prefix(const std::vector<NodeId>& order, std::size_t k) {
    return std::span<const NodeId>(order).first(std::min(k, order.size()));
}

}  // namespace

std::vector<NodeId> top_values_seeds(const Graph& g, const RankVector& rank, ValuesCut cut) {
    require_rank_size(g, rank);
    const auto keys = rank_keys(rank);
    std::vector<double> distinct = keys;
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    const std::size_t d = distinct.size();
    const std::size_t take = cut == ValuesCut::Ceil ? (d + 9) / 10 : d / 10;
    std::vector<NodeId> seeds;
    if (take == 0) return seeds;
    const double cutoff = distinct[take - 1];
    for (NodeId v = 0; v < keys.size(); ++v) {
        if (keys[v] >= cutoff) seeds.push_back(v);
    }
    return seeds;
}

double top10(const Graph& g, const RankVector& rank, const ThresholdAssignment& theta, MetricsOptions options) {
    require_rank_size(g, rank);
    require_ten(g, "Top10");
    const LinearThreshold engine(g, theta, options.rule);
    LinearThreshold::Workspace ws;
    const auto order = ranking_order(g, rank);
    return fraction(engine.spread_size(top_prefix(order, 10), ws), g);
}

SeedSpread top10pct_actors(const Graph& g, const RankVector& rank, const ThresholdAssignment& theta,
                           MetricsOptions options) {
    require_rank_size(g, rank);
    require_ten(g, "Top10%Actors");
    const LinearThreshold engine(g, theta, options.rule);
    LinearThreshold::Workspace ws;
    const auto order = ranking_order(g, rank);
    const auto seeds = top_prefix(order, g.node_count() / 10);
    return {fraction(engine.spread_size(seeds, ws), g), seeds.size()};
}

SeedSpread top10pct_values(const Graph& g, const RankVector& rank, const ThresholdAssignment& theta,
                           MetricsOptions options) {
    const LinearThreshold engine(g, theta, options.rule);
    LinearThreshold::Workspace ws;
    const auto seeds = top_values_seeds(g, rank, options.values_cut);
    return {fraction(engine.spread_size(seeds, ws), g), seeds.size()};
}

MetricsRow metrics_row(const Graph& g, const RankVector& rank, const ThresholdAssignment& theta,
                       MetricsOptions options) {
    require_rank_size(g, rank);
    MetricsRow row;
    std::vector<std::string> notes;

    const RankStats stats = rank_stats(rank);
    row.sigma = stats.sigma;
    row.distinct = stats.distinct;
    const GiniResult gc = gini(rank.values);
    row.gini = gc.value;
    if (gc.all_zero) notes.emplace_back("gini: all ranks are zero");

    const LinearThreshold engine(g, theta, options.rule);
    LinearThreshold::Workspace ws;
    if (g.node_count() >= 10) {
        const auto order = ranking_order(g, rank);
        row.top10 = fraction(engine.spread_size(top_prefix(order, 10), ws), g);
        const auto actors = top_prefix(order, g.node_count() / 10);
        row.top10pct_actors = SeedSpread{fraction(engine.spread_size(actors, ws), g), actors.size()};
    } else {
        notes.push_back("top10: requires n >= 10 (n = " + std::to_string(g.node_count()) + ")");
    }
    const auto value_seeds = top_values_seeds(g, rank, options.values_cut);
    row.top10pct_values = SeedSpread{fraction(engine.spread_size(value_seeds, ws), g), value_seeds.size()};

    if (!notes.empty()) {
        row.status.clear();
        for (const auto& note : notes) {
            if (!row.status.empty()) row.status += "; ";
            row.status += note;
        }
    }
    return row;
}

}  // namespace infrank
