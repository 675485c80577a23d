#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infrank/centrality.hpp"
#include "infrank/diffusion.hpp"
#include "infrank/graph.hpp"
#include "infrank/threshold_assignment.hpp"

namespace infrank {

struct GiniResult {
    double value = 0.0;
    /// Every input was zero; the coefficient is 0/0 and reported as 0.
    bool all_zero = false;
};

/// sum_ij |x_i - x_j| / (2 n sum_i x_i), evaluated on sorted values in
/// O(n log n). Throws ValidationError on empty input or a negative value.
GiniResult gini(std::span<const double> values);

/// Quantized identity of each rank value, ordered like the values. Two nodes
/// tie iff their keys are equal. Exact ranks use their integer numerators;
/// others are rounded to 12 significant digits.
std::vector<double> rank_keys(const RankVector& rank);

struct RankStats {
    /// Population standard deviation.
    double sigma = 0.0;
    /// Number of distinct keys (see rank_keys).
    std::size_t distinct = 0;
};

RankStats rank_stats(const RankVector& rank);

/// Nodes by descending rank, ties broken by ascending original ID.
std::vector<NodeId> ranking_order(const Graph& g, const RankVector& rank);

struct SeedSpread {
    double fraction = 0.0;
    std::size_t seed_count = 0;
};

/// Rounding used to turn "10% of the distinct values" into a count.
enum class ValuesCut { Ceil, Floor };

struct MetricsOptions {
    ActivationRule rule = ActivationRule::AtLeast;
    ValuesCut values_cut = ValuesCut::Ceil;
};

/// |F(X_10)| / n with X_10 the ten best-ranked nodes. Needs n >= 10.
double top10(const Graph& g, const RankVector& rank, const ThresholdAssignment& theta,
             MetricsOptions options = {});

/// Spread of the floor(n/10) best-ranked nodes. Needs n >= 10.
SeedSpread top10pct_actors(const Graph& g, const RankVector& rank, const ThresholdAssignment& theta,
                           MetricsOptions options = {});

/// Spread of every node holding one of the top 10% distinct rank values.
SeedSpread top10pct_values(const Graph& g, const RankVector& rank, const ThresholdAssignment& theta,
                           MetricsOptions options = {});

/// Seed set used by top10pct_values.
std::vector<NodeId> top_values_seeds(const Graph& g, const RankVector& rank, ValuesCut cut);

struct MetricsRow {
    double sigma = 0.0;
    std::size_t distinct = 0;
    double gini = 0.0;
    std::optional<double> top10;
    std::optional<SeedSpread> top10pct_actors;
    std::optional<SeedSpread> top10pct_values;
    /// "ok", or the reasons some fields are missing.
    std::string status = "ok";
};

/// All of the above for one ranking. Failures of individual top metrics (for
/// example n < 10) leave that field empty and are recorded in status.
MetricsRow metrics_row(const Graph& g, const RankVector& rank, const ThresholdAssignment& theta,
                       MetricsOptions options = {});

}  // namespace infrank
