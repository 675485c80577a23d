#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "infrank/centrality.hpp"
#include "infrank/graph.hpp"
#include "infrank/graph_stats.hpp"
#include "infrank/metrics.hpp"
#include "infrank/thresholds.hpp"

namespace infrank {

/// Library version string baked in at build time.
std::string_view tool_version() noexcept;

enum class Command { Stats, Rank, ExpUniform, ExpRandom, ExpCentrality };

std::string_view command_name(Command c) noexcept;
std::optional<Command> parse_command(std::string_view text) noexcept;

/// Everything needed to rerun one CLI invocation.
struct ExperimentConfig {
    Command command = Command::Stats;

    std::string graph_path;
    /// Label for the `network` column; defaults to the graph file stem.
    std::string network;
    bool directed = false;
    bool weighted = false;

    /// Uniform sweep, and the single theta used by `rank` for LTR/FLTR.
    std::vector<double> thetas;
    /// Threshold CSV for `rank` (overrides thetas).
    std::string theta_file;

    std::optional<Interval> interval;
    std::size_t runs = 1;
    bool top_on_mean = false;

    std::optional<Measure> measure;
    bool complement = false;

    PageRankOptions pagerank;
    IcrOptions icr;
    BetweennessOptions betweenness;
    MetricsOptions metrics;
    /// Uniform theta used for the FLTR rank that seeds FLTR-derived thresholds.
    double fltr_base_theta = 0.5;

    std::uint64_t seed = 1;
    std::string out;
    unsigned threads = 0;

    /// Throws ValidationError if the combination is inconsistent for `command`.
    void validate() const;
    std::string network_label() const;
};

/// One report line: a configuration tag plus its metrics.
struct ReportRow {
    std::string network;
    std::string scheme;
    std::string param;
    std::optional<MetricsRow> metrics;
    std::optional<ThresholdSummary> thresholds;
    std::string status = "ok";
    double seconds = 0.0;
};

struct ExperimentReport {
    std::string version;
    ExperimentConfig config;
    std::vector<ReportRow> rows;
};

/// Sink for progress messages; may be null.
using LogStream = std::ostream*;

Graph load_graph(const ExperimentConfig& config);

GraphStats run_stats(const Graph& g, const ExperimentConfig& config);

/// The configured measure, ready for export.
RankVector run_rank(const Graph& g, const ExperimentConfig& config);

/// One row per theta: uniform thresholds, FLTR, metrics.
ExperimentReport run_uniform(const Graph& g, const ExperimentConfig& config, LogStream log = nullptr);

/// One row: FLTR averaged over `runs` random assignments. Rank statistics come
/// from the averaged vector; the top metrics are computed per run (that run's
/// ranking under that run's thresholds) and averaged, with set sizes taken from
/// the last run. With top_on_mean the top metrics instead use the averaged
/// ranking under the last run's thresholds.
ExperimentReport run_random(const Graph& g, const ExperimentConfig& config, LogStream log = nullptr);

/// One row: thresholds set to the configured centrality (or its complement),
/// then FLTR and metrics, plus the threshold summary.
ExperimentReport run_centrality(const Graph& g, const ExperimentConfig& config, LogStream log = nullptr);

/// Header `network,n,m,directed,weighted,acc,diameter,main_core`.
void write_stats_header(std::ostream& out);
void write_stats_row(const std::string& network, const GraphStats& stats, std::ostream& out);

/// `original_id,value`, by descending value then ascending ID.
void write_rank_csv(const Graph& g, const RankVector& rank, std::ostream& out);

/// Columns: network,scheme,param,sigma,distinct,gini,top10,top10pA,szA,top10pV,szV,
/// theta_min,theta_max,theta_mean,theta_sd,status
void write_report_csv(const ExperimentReport& report, std::ostream& out);

/// Version, config echo and per-row timings as JSON. The `config` member can
/// be fed back through --config to regenerate the CSV.
void write_report_meta(const ExperimentReport& report, std::ostream& out);

/// JSON (de)serialization of the config; unknown keys are rejected.
std::string config_to_json(const ExperimentConfig& config);
/// Applies the keys present in `json` on top of `base`. Accepts either a bare
/// config object or a report meta file (uses its `config` member).
ExperimentConfig config_from_json(const std::string& json, ExperimentConfig base = {});
ExperimentConfig load_config_file(const std::filesystem::path& path, ExperimentConfig base = {});

/// Parses "0.25,0.5,1" or the range form "0.20:0.50:0.02" (inclusive).
std::vector<double> parse_theta_list(std::string_view text);

}  // namespace infrank
