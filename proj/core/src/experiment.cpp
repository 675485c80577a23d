#include "infrank/experiment.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "infrank/errors.hpp"
#include "infrank/graph_io.hpp"
#include "text_format.hpp"

namespace infrank {

std::string_view tool_version() noexcept { return INFRANK_VERSION; }

std::string_view command_name(Command c) noexcept {
    switch (c) {
        case Command::Stats: return "stats";
        case Command::Rank: return "rank";
        case Command::ExpUniform: return "exp-uniform";
        case Command::ExpRandom: return "exp-random";
        case Command::ExpCentrality: return "exp-centrality";
    }
    return "?";
}

std::optional<Command> parse_command(std::string_view text) noexcept {
    for (Command c : {Command::Stats, Command::Rank, Command::ExpUniform, Command::ExpRandom,
                      Command::ExpCentrality}) {
        if (command_name(c) == text) return c;
    }
    return std::nullopt;
}

std::string ExperimentConfig::network_label() const {
    if (!network.empty()) return network;
    return std::filesystem::path(graph_path).stem().string();
}

void ExperimentConfig::validate() const {
    if (graph_path.empty()) throw ValidationError("no graph given");
    for (double t : thetas) {
        if (!(t >= 0.0 && t <= 1.0)) throw ValidationError("theta " + format_real(t) + " outside [0, 1]");
    }
    if (runs == 0) throw ValidationError("runs must be at least 1");

    switch (command) {
        case Command::Stats:
            break;
        case Command::Rank:
            if (!measure) throw ValidationError("rank needs --measure");
            if (thetas.size() > 1) throw ValidationError("rank takes a single --theta");
            break;
        case Command::ExpUniform:
            if (thetas.empty()) throw ValidationError("exp-uniform needs --theta");
            if (interval || measure) throw ValidationError("exp-uniform takes only a theta list as scheme");
            break;
        case Command::ExpRandom:
            if (!interval) throw ValidationError("exp-random needs --interval");
            if (!thetas.empty() || measure) throw ValidationError("exp-random takes only an interval as scheme");
            break;
        case Command::ExpCentrality:
            if (!measure) throw ValidationError("exp-centrality needs --measure");
            if (*measure == Measure::LTR) {
                throw ValidationError("exp-centrality supports Btwn, ICR, PgR and FLTR");
            }
            if (!thetas.empty() || interval) {
                throw ValidationError("exp-centrality takes only a measure as scheme");
            }
            break;
    }
}

Graph load_graph(const ExperimentConfig& config) {
    return load_edge_list_file(config.graph_path, {config.directed, config.weighted});
}

GraphStats run_stats(const Graph& g, const ExperimentConfig& config) {
    return compute_stats(g, Parallelism{config.threads});
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

RankVector base_rank(const Graph& g, const ExperimentConfig& config, Measure measure) {
    const Parallelism par{config.threads};
    switch (measure) {
        case Measure::Betweenness:
            return betweenness(g, config.betweenness, par);
        case Measure::PageRank:
            return pagerank(g, config.pagerank);
        case Measure::ICR: {
            IcrOptions options = config.icr;
            options.seed = config.seed;
            return icr(g, options, par);
        }
        case Measure::LTR:
        case Measure::FLTR: {
            ThresholdAssignment theta;
            if (!config.theta_file.empty()) {
                std::ifstream in(config.theta_file);
                if (!in) throw DataError("cannot open threshold file '" + config.theta_file + "'");
                theta = read_thresholds_csv(g, in);
            } else {
                theta = uniform_thresholds(g, config.thetas.empty() ? config.fltr_base_theta : config.thetas.front());
            }
            return measure == Measure::LTR ? ltr(g, theta, par, config.metrics.rule)
                                           : fltr(g, theta, par, config.metrics.rule);
        }
    }
    throw ValidationError("unknown measure");
}

void log_row(LogStream log, const ReportRow& row) {
    if (!log) return;
    *log << "[" << row.network << "] " << row.scheme << " " << row.param << ": " << row.status << " ("
         << row.seconds << " s)\n";
}

/// Top-metric spread sizes for one ranking under one assignment.
struct TopCounts {
    std::optional<std::size_t> top10;
    std::optional<std::size_t> actors;
    std::size_t actors_size = 0;
    std::size_t values = 0;
    std::size_t values_size = 0;
};

TopCounts top_counts(const Graph& g, const RankVector& rank, const ThresholdAssignment& theta,
                     const MetricsOptions& options) {
    const LinearThreshold engine(g, theta, options.rule);
    LinearThreshold::Workspace ws;
    TopCounts c;
    if (g.node_count() >= 10) {
        const auto order = ranking_order(g, rank);
        const std::span<const NodeId> all(order);
        c.top10 = engine.spread_size(all.first(10), ws);
        c.actors_size = g.node_count() / 10;
        c.actors = engine.spread_size(all.first(c.actors_size), ws);
    }
    const auto seeds = top_values_seeds(g, rank, options.values_cut);
    c.values = engine.spread_size(seeds, ws);
    c.values_size = seeds.size();
    return c;
}

std::string interval_text(const Interval& iv) {
    return std::string(iv.lo_exclusive ? "(" : "[") + format_real(iv.lo) + ":" + format_real(iv.hi) + "]";
}

}  // namespace

RankVector run_rank(const Graph& g, const ExperimentConfig& config) {
    config.validate();
    return base_rank(g, config, *config.measure);
}

ExperimentReport run_uniform(const Graph& g, const ExperimentConfig& config, LogStream log) {
    config.validate();
    ExperimentReport report{std::string(tool_version()), config, {}};
    for (double theta : config.thetas) {
        const auto start = Clock::now();
        ReportRow row{config.network_label(), "uniform", format_real(theta), {}, {}, "ok", 0.0};
        try {
            const ThresholdAssignment assignment = uniform_thresholds(g, theta);
            const RankVector rank = fltr(g, assignment, Parallelism{config.threads}, config.metrics.rule);
            row.metrics = metrics_row(g, rank, assignment, config.metrics);
            row.thresholds = summarize(assignment);
            row.status = row.metrics->status;
        } catch (const DataError& e) {
            row.status = std::string("error: ") + e.what();
        }
        row.seconds = seconds_since(start);
        log_row(log, row);
        report.rows.push_back(std::move(row));
    }
    return report;
}

ExperimentReport run_random(const Graph& g, const ExperimentConfig& config, LogStream log) {
    config.validate();
    ExperimentReport report{std::string(tool_version()), config, {}};
    const Interval iv = *config.interval;
    const auto start = Clock::now();
    ReportRow row{config.network_label(), "random",
                  interval_text(iv) + " runs=" + std::to_string(config.runs) +
                      (config.top_on_mean ? " top-on-mean" : ""),
                  {}, {}, "ok", 0.0};

    try {
        std::uint64_t top10_sum = 0;
        std::uint64_t actors_sum = 0;
        std::uint64_t values_sum = 0;
        TopCounts last;
        ThresholdAssignment last_theta;

        const RunObserver observer = [&](std::size_t run, const ThresholdAssignment& theta, const RankVector& rank) {
            if (config.top_on_mean) {
                if (run + 1 == config.runs) last_theta = theta;
                return;
            }
            last = top_counts(g, rank, theta, config.metrics);
            if (last.top10) top10_sum += *last.top10;
            if (last.actors) actors_sum += *last.actors;
            values_sum += last.values;
            if (log) *log << "[" << row.network << "] run " << run + 1 << "/" << config.runs << "\n";
        };

        const RankVector mean = fltr_sampled(g, random_scheme(g, iv, config.seed), config.runs,
                                             Parallelism{config.threads}, config.metrics.rule, observer);

        MetricsRow m;
        if (config.top_on_mean) {
            m = metrics_row(g, mean, last_theta, config.metrics);
        } else {
            const RankStats stats = rank_stats(mean);
            m.sigma = stats.sigma;
            m.distinct = stats.distinct;
            const GiniResult gc = gini(mean.values);
            m.gini = gc.value;
            const double denom = static_cast<double>(config.runs) * static_cast<double>(g.node_count());
            if (last.top10) {
                m.top10 = static_cast<double>(top10_sum) / denom;
                m.top10pct_actors = SeedSpread{static_cast<double>(actors_sum) / denom, last.actors_size};
            } else {
                m.status = "top10: requires n >= 10 (n = " + std::to_string(g.node_count()) + ")";
            }
            m.top10pct_values = SeedSpread{static_cast<double>(values_sum) / denom, last.values_size};
            if (gc.all_zero) m.status = (m.status == "ok" ? "" : m.status + "; ") + "gini: all ranks are zero";
        }
        row.status = m.status;
        row.metrics = m;
    } catch (const DataError& e) {
        row.status = std::string("error: ") + e.what();
    }
    row.seconds = seconds_since(start);
    log_row(log, row);
    report.rows.push_back(std::move(row));
    return report;
}

ExperimentReport run_centrality(const Graph& g, const ExperimentConfig& config, LogStream log) {
    config.validate();
    ExperimentReport report{std::string(tool_version()), config, {}};
    const Measure measure = *config.measure;
    const auto start = Clock::now();
    ReportRow row{config.network_label(), "centrality",
                  std::string(config.complement ? "1-" : "") + std::string(label(measure)), {}, {}, "ok", 0.0};
    try {
        const RankVector base = base_rank(g, config, measure);
        const ThresholdAssignment theta = thresholds_from_rank(base, config.complement);
        const RankVector rank = fltr(g, theta, Parallelism{config.threads}, config.metrics.rule);
        row.metrics = metrics_row(g, rank, theta, config.metrics);
        row.thresholds = summarize(theta);
        row.status = row.metrics->status;
    } catch (const DataError& e) {
        row.status = std::string("error: ") + e.what();
    }
    row.seconds = seconds_since(start);
    log_row(log, row);
    report.rows.push_back(std::move(row));
    return report;
}

}  // namespace infrank
