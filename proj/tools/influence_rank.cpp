// influence-rank: graph statistics, centrality export and threshold experiments.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "infrank/errors.hpp"
#include "infrank/experiment.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    std::string command;
    std::string config_file;
    std::string graph;
    std::string name;
    bool directed = false;
    bool weighted = false;
    std::string theta;
    std::string theta_file;
    std::string interval;
    bool lo_exclusive = false;
    bool lo_inclusive = false;
    std::size_t runs = 1;
    std::string measure;
    bool complement = false;
    std::uint64_t seed = 1;
    std::string out;
    unsigned threads = 0;
    bool top_on_mean = false;
    double icr_p = 0.01;
    std::size_t icr_runs = 100;
    double alpha = 0.85;
    std::string values_cut;
    std::string activation;
    std::string btwn_norm;
    double fltr_base = 0.5;
    bool quiet = false;
};

infrank::Interval parse_interval(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--interval expects LO,HI");
    try {
        std::size_t used = 0;
        infrank::Interval iv;
        iv.lo = std::stod(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("lo");
        const std::string hi = text.substr(comma + 1);
        iv.hi = std::stod(hi, &used);
        if (used != hi.size()) throw std::invalid_argument("hi");
        iv.lo_exclusive = iv.lo == 0.0 && iv.lo < iv.hi;
        return iv;
    } catch (const std::logic_error&) {
        throw UsageError("--interval expects LO,HI, got '" + text + "'");
    }
}

/// Config file first, then every flag that was given on the command line.
infrank::ExperimentConfig build_config(const CLI::App& app, const Flags& f) {
    using namespace infrank;
    ExperimentConfig c;
    if (!f.config_file.empty()) {
        try {
            c = load_config_file(f.config_file);
        } catch (const DataError& e) {
            throw UsageError(e.what());
        }
    }
    const auto given = [&](const char* name) { return app.count(name) > 0; };

    if (!f.command.empty()) {
        const auto cmd = parse_command(f.command);
        if (!cmd) throw UsageError("unknown command '" + f.command + "'");
        c.command = *cmd;
    } else if (f.config_file.empty()) {
        throw UsageError("a command is required");
    }
    if (given("--graph")) c.graph_path = f.graph;
    if (given("--name")) c.network = f.name;
    if (given("--directed")) c.directed = f.directed;
    if (given("--weighted")) c.weighted = f.weighted;
    if (given("--theta")) {
        try {
            c.thetas = parse_theta_list(f.theta);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--theta: ") + e.what());
        }
    }
    if (given("--theta-file")) c.theta_file = f.theta_file;
    if (given("--interval")) c.interval = parse_interval(f.interval);
    if (c.interval) {
        if (given("--lo-exclusive")) c.interval->lo_exclusive = true;
        if (given("--lo-inclusive")) c.interval->lo_exclusive = false;
    }
    if (given("--runs")) c.runs = f.runs;
    if (given("--measure")) {
        c.measure = parse_measure(f.measure);
        if (!c.measure) throw UsageError("unknown measure '" + f.measure + "' (Btwn, PgR, ICR, LTR, FLTR)");
    }
    if (given("--complement")) c.complement = f.complement;
    if (given("--seed")) c.seed = f.seed;
    if (given("--out")) c.out = f.out;
    if (given("--threads")) c.threads = f.threads;
    if (given("--top-on-mean")) c.top_on_mean = f.top_on_mean;
    if (given("--icr-p")) c.icr.p = f.icr_p;
    if (given("--icr-runs")) c.icr.runs = f.icr_runs;
    if (given("--alpha")) c.pagerank.alpha = f.alpha;
    if (given("--fltr-base-theta")) c.fltr_base_theta = f.fltr_base;
    if (given("--values-cut")) c.metrics.values_cut = f.values_cut == "floor" ? ValuesCut::Floor : ValuesCut::Ceil;
    if (given("--activation")) {
        c.metrics.rule = f.activation == "gt" ? ActivationRule::Exceeds : ActivationRule::AtLeast;
    }
    if (given("--btwn-norm")) {
        c.betweenness.normalization = f.btwn_norm == "none"        ? BetweennessNormalization::None
                                      : f.btwn_norm == "unordered" ? BetweennessNormalization::UnorderedPairs
                                                                   : BetweennessNormalization::OrderedPairs;
    }

    try {
        c.validate();
    } catch (const ValidationError& e) {
        throw UsageError(e.what());
    }
    return c;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw infrank::DataError("cannot write '" + path + "'");
    file << text;
    if (!file) throw infrank::DataError("write failed for '" + path + "'");
}

int run(const infrank::ExperimentConfig& c, bool quiet) {
    using namespace infrank;
    std::ostream* log = quiet ? nullptr : &std::cerr;
    const Graph g = load_graph(c);
    if (log) {
        *log << "loaded " << c.graph_path << ": n=" << g.node_count() << " edges=" << g.edge_count() << "\n";
    }

    std::ostringstream out;
    switch (c.command) {
        case Command::Stats:
            write_stats_header(out);
            write_stats_row(c.network_label(), run_stats(g, c), out);
            emit(c.out, out.str());
            return 0;
        case Command::Rank: {
            const RankVector rank = run_rank(g, c);
            if (log && !rank.converged) *log << "warning: PageRank hit max_iter before converging\n";
            write_rank_csv(g, rank, out);
            emit(c.out, out.str());
            return 0;
        }
        case Command::ExpUniform:
        case Command::ExpRandom:
        case Command::ExpCentrality:
            break;
    }

    const ExperimentReport report = c.command == Command::ExpUniform ? run_uniform(g, c, log)
                                    : c.command == Command::ExpRandom ? run_random(g, c, log)
                                                                      : run_centrality(g, c, log);
    write_report_csv(report, out);
    emit(c.out, out.str());
    if (!c.out.empty() && c.out != "-") {
        std::ostringstream meta;
        write_report_meta(report, meta);
        emit(c.out + ".meta.json", meta.str());
    }
    for (const ReportRow& row : report.rows) {
        if (row.status.rfind("error:", 0) == 0) return kExitData;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear Threshold influence ranks and threshold experiments", "influence-rank"};
    app.set_version_flag("--version", std::string(infrank::tool_version()));
    Flags f;

    app.add_option("command", f.command, "stats | rank | exp-uniform | exp-random | exp-centrality");
    app.add_option("--config", f.config_file, "JSON config (a report .meta.json also works); flags override it");
    app.add_option("--graph", f.graph, "Edge list path");
    app.add_option("--name", f.name, "Network label for reports (default: file stem)");
    app.add_flag("--directed", f.directed, "Treat edges as arcs");
    app.add_flag("--weighted", f.weighted, "Read a third weight column");
    app.add_option("--theta", f.theta, "Comma list or lo:hi:step range of uniform thresholds");
    app.add_option("--theta-file", f.theta_file, "original_id,theta CSV (rank with LTR/FLTR)");
    app.add_option("--interval", f.interval, "LO,HI for random thresholds");
    auto* lo_ex = app.add_flag("--lo-exclusive", f.lo_exclusive, "Exclude LO (the default when LO is 0)");
    auto* lo_in = app.add_flag("--lo-inclusive", f.lo_inclusive, "Include LO");
    lo_ex->excludes(lo_in);
    app.add_option("--runs", f.runs, "Random assignments to average");
    app.add_option("--measure", f.measure, "Btwn | PgR | ICR | LTR | FLTR");
    app.add_flag("--complement", f.complement, "Use 1 - centrality as threshold");
    app.add_option("--seed", f.seed, "Master seed");
    app.add_option("--out", f.out, "Output CSV (default stdout); also writes <out>.meta.json for experiments");
    app.add_option("--threads", f.threads, "Worker threads, 0 = all cores");
    app.add_flag("--top-on-mean", f.top_on_mean, "Random experiment: top metrics on the averaged ranking");
    app.add_option("--icr-p", f.icr_p, "Independent Cascade arc probability");
    app.add_option("--icr-runs", f.icr_runs, "Cascades per node for ICR");
    app.add_option("--alpha", f.alpha, "PageRank damping");
    app.add_option("--fltr-base-theta", f.fltr_base, "Uniform theta for the FLTR used as a threshold source");
    app.add_option("--values-cut", f.values_cut, "ceil | floor for Top10%Values")
        ->check(CLI::IsMember({"ceil", "floor"}));
    app.add_option("--activation", f.activation, "ge (>=) | gt (>)")->check(CLI::IsMember({"ge", "gt"}));
    app.add_option("--btwn-norm", f.btwn_norm, "ordered | unordered | none")
        ->check(CLI::IsMember({"ordered", "unordered", "none"}));
    app.add_flag("--quiet", f.quiet, "No progress on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    infrank::ExperimentConfig config;
    try {
        config = build_config(app, f);
    } catch (const UsageError& e) {
        std::cerr << "influence-rank: " << e.what() << "\n" << "Run with --help for usage.\n";
        return kExitUsage;
    }

    try {
        return run(config, f.quiet);
    } catch (const infrank::DataError& e) {
        std::cerr << "influence-rank: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "influence-rank: " << e.what() << "\n";
        return kExitData;
    }
}
