#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infrank/diffusion.hpp"
#include "infrank/graph.hpp"
#include "infrank/parallel.hpp"
#include "infrank/threshold_assignment.hpp"

namespace infrank {

enum class Measure { Betweenness, PageRank, ICR, LTR, FLTR };

/// "Btwn", "PgR", "ICR", "LTR", "FLTR".
std::string_view label(Measure m) noexcept;
/// Inverse of label(); case-sensitive, also accepts lowercase.
std::optional<Measure> parse_measure(std::string_view text) noexcept;

/// Exact value representation for ranks that are ratios of integers
/// (LT-based ranks are |F| / n, and averages of them).
struct ExactRatio {
    std::vector<std::uint64_t> numerators;
    std::uint64_t denominator = 1;
};

struct RankVector {
    Measure measure = Measure::FLTR;
    std::vector<double> values;
    /// Parameter echo, e.g. "alpha=0.85" or the threshold provenance.
    std::string params;
    /// Present for LTR/FLTR (and their averages).
    std::optional<ExactRatio> exact;
    /// PageRank only: false when max_iter was hit before tol.
    bool converged = true;
    std::size_t iterations = 0;

    std::size_t size() const noexcept { return values.size(); }
};

enum class BetweennessNormalization {
    OrderedPairs,    // divide by (n-1)(n-2)
    UnorderedPairs,  // divide by (n-1)(n-2)/2
    None,
};

struct BetweennessOptions {
    BetweennessNormalization normalization = BetweennessNormalization::OrderedPairs;
};

/// Brandes accumulation over all ordered source/target pairs, following arc
/// directions (both directions for undirected graphs).
RankVector betweenness(const Graph& g, BetweennessOptions options = {}, Parallelism par = {});

struct PageRankOptions {
    double alpha = 0.85;
    double tol = 1e-10;
    std::size_t max_iter = 200;
};

/// Probability-normalized PageRank by power iteration: uniform (1-alpha)/n
/// teleport and dangling mass spread uniformly. Values sum to 1. Stops once the
/// L1 change drops below tol; hitting max_iter sets converged = false.
RankVector pagerank(const Graph& g, PageRankOptions options = {});

struct IcrOptions {
    double p = 0.01;
    std::size_t runs = 100;
    std::uint64_t seed = 1;
};

/// Mean singleton Independent Cascade spread per node, divided by the largest
/// mean. Node u draws from its own stream seeded by (seed, u).
RankVector icr(const Graph& g, IcrOptions options = {}, Parallelism par = {});

/// LTR(i) = |F({i} ∪ N(i))| / n.
RankVector ltr(const Graph& g, const ThresholdAssignment& theta, Parallelism par = {},
               ActivationRule rule = ActivationRule::AtLeast);

/// FLTR(i) = |F({i} ∪ N+(i))| / n.
RankVector fltr(const Graph& g, const ThresholdAssignment& theta, Parallelism par = {},
                ActivationRule rule = ActivationRule::AtLeast);

/// Produces the threshold assignment for run r.
using ThresholdScheme = std::function<ThresholdAssignment(std::size_t run)>;

/// Called after each run with the run's assignment and FLTR vector.
using RunObserver = std::function<void(std::size_t run, const ThresholdAssignment&, const RankVector&)>;

/// Per-node mean of FLTR over `runs` assignments drawn from `scheme`.
RankVector fltr_sampled(const Graph& g, const ThresholdScheme& scheme, std::size_t runs,
                        Parallelism par = {}, ActivationRule rule = ActivationRule::AtLeast,
                        const RunObserver& observer = {});

}  // namespace infrank
