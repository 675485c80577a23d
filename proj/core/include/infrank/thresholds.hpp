#pragma once

#include <cstdint>
#include <iosfwd>

#include "infrank/centrality.hpp"
#include "infrank/graph.hpp"
#include "infrank/threshold_assignment.hpp"

namespace infrank {

/// Same threshold for every node. Throws ValidationError unless theta is in [0, 1].
ThresholdAssignment uniform_thresholds(const Graph& g, double theta);

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    /// Exclude lo itself: draws landing exactly on lo are redrawn.
    bool lo_exclusive = false;
};

/// i.i.d. uniform draws from [lo, hi] (or (lo, hi]). lo == hi yields a constant
/// assignment. Throws ValidationError if lo > hi, the bounds leave [0, 1], or
/// the interval is empty ((c, c]).
ThresholdAssignment random_thresholds(const Graph& g, Interval interval, std::uint64_t seed);

/// theta(i) = rank(i), or 1 - rank(i) with `complement`. Throws ValidationError
/// if any rank value lies outside [0, 1].
ThresholdAssignment thresholds_from_rank(const RankVector& rank, bool complement);

/// theta -> 1 - theta, per node.
ThresholdAssignment complement(const ThresholdAssignment& theta);

/// Scheme for fltr_sampled: run r draws random_thresholds with a seed derived
/// from (master_seed, r).
ThresholdScheme random_scheme(const Graph& g, Interval interval, std::uint64_t master_seed);

/// Scheme returning the same uniform assignment every run.
ThresholdScheme uniform_scheme(const Graph& g, double theta);

struct ThresholdSummary {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    /// Population standard deviation.
    double stddev = 0.0;
};

ThresholdSummary summarize(const ThresholdAssignment& theta);

/// CSV `original_id,theta`, one row per node in index order, with a header.
void write_thresholds_csv(const Graph& g, const ThresholdAssignment& theta, std::ostream& out);

/// Reads the format written by write_thresholds_csv. Every node must appear
/// exactly once; unknown IDs, duplicates and out-of-range values are errors.
ThresholdAssignment read_thresholds_csv(const Graph& g, std::istream& in);

}  // namespace infrank
