#include <ostream>

#include <json.hpp>

#include "infrank/experiment.hpp"
#include "infrank/metrics.hpp"
#include "text_format.hpp"

namespace infrank {

namespace {

/// Quotes a CSV field when it needs it.
std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

}  // namespace

void write_stats_header(std::ostream& out) { out << "network,n,m,directed,weighted,acc,diameter,main_core\n"; }

void write_stats_row(const std::string& network, const GraphStats& s, std::ostream& out) {
    out << csv_field(network) << ',' << s.n << ',' << s.m << ',' << (s.directed ? "directed" : "undirected") << ','
        << (s.weighted ? "weighted" : "unweighted") << ',' << format_real(s.acc) << ',' << s.diameter.to_string()
        << ',' << s.main_core_size << '\n';
}

void write_rank_csv(const Graph& g, const RankVector& rank, std::ostream& out) {
    out << "original_id,value\n";
    for (NodeId v : ranking_order(g, rank)) {
        out << g.original_id(v) << ',' << format_real(rank.values[v]) << '\n';
    }
}

void write_report_csv(const ExperimentReport& report, std::ostream& out) {
    out << "network,scheme,param,sigma,distinct,gini,top10,top10pA,szA,top10pV,szV,"
           "theta_min,theta_max,theta_mean,theta_sd,status\n";
    for (const ReportRow& row : report.rows) {
        out << csv_field(row.network) << ',' << csv_field(row.scheme) << ',' << csv_field(row.param) << ',';
        if (row.metrics) {
            const MetricsRow& m = *row.metrics;
            out << format_real(m.sigma) << ',' << m.distinct << ',' << format_real(m.gini) << ',';
            if (m.top10) out << format_real(*m.top10);
            out << ',';
            if (m.top10pct_actors) out << format_real(m.top10pct_actors->fraction) << ',' << m.top10pct_actors->seed_count;
            else out << ',';
            out << ',';
            if (m.top10pct_values) out << format_real(m.top10pct_values->fraction) << ',' << m.top10pct_values->seed_count;
            else out << ',';
        } else {
            out << ",,,,,,,";
        }
        out << ',';
        if (row.thresholds) {
            const ThresholdSummary& t = *row.thresholds;
            out << format_real(t.min) << ',' << format_real(t.max) << ',' << format_real(t.mean) << ','
                << format_real(t.stddev);
        } else {
            out << ",,,";
        }
        out << ',' << csv_field(row.status) << '\n';
    }
}

void write_report_meta(const ExperimentReport& report, std::ostream& out) {
    nlohmann::ordered_json meta;
    meta["tool"] = "influence-rank";
    meta["version"] = report.version;
    meta["config"] = nlohmann::ordered_json::parse(config_to_json(report.config));
    auto& rows = meta["rows"] = nlohmann::ordered_json::array();
    for (const ReportRow& row : report.rows) {
        rows.push_back({{"network", row.network},
                        {"scheme", row.scheme},
                        {"param", row.param},
                        {"status", row.status},
                        {"seconds", row.seconds}});
    }
    out << meta.dump(2) << '\n';
}

}  // namespace infrank
