#include <gtest/gtest.h>

#include <sstream>

#include "infrank/errors.hpp"
#include "infrank/experiment.hpp"
#include "infrank/graph_io.hpp"
#include "oracles.hpp"

using namespace infrank;

namespace {

const std::string kSynthetic = INFRANK_TEST_DATA "/synthetic300.txt";
const std::string kTriangle = INFRANK_TEST_DATA "/triangle.txt";

ExperimentConfig base(Command cmd, const std::string& graph = kSynthetic) {
    ExperimentConfig c;
    c.command = cmd;
    c.graph_path = graph;
    c.threads = 2;
    return c;
}

std::string csv(const ExperimentReport& r) {
    std::ostringstream out;
    write_report_csv(r, out);
    return out.str();
}

}  // namespace

TEST(ThetaList, CommaList) {
    EXPECT_EQ(parse_theta_list("0.25,0.5,0.75,1"), (std::vector<double>{0.25, 0.5, 0.75, 1.0}));
}

TEST(ThetaList, InclusiveRangeHasSixteenSteps) {
    const auto v = parse_theta_list("0.20:0.50:0.02");
    ASSERT_EQ(v.size(), 16u);
    EXPECT_EQ(v.front(), 0.2);
    EXPECT_EQ(v[3], 0.26);
    EXPECT_EQ(v.back(), 0.5);
}

TEST(ThetaList, RejectsGarbage) {
    EXPECT_THROW(parse_theta_list(""), std::invalid_argument);
    EXPECT_THROW(parse_theta_list("0.5,abc"), std::invalid_argument);
    EXPECT_THROW(parse_theta_list("0.1:0.2"), std::invalid_argument);
    EXPECT_THROW(parse_theta_list("0.5:0.1:0.1"), std::invalid_argument);
}

TEST(Config, ValidateEnforcesOneScheme) {
    auto c = base(Command::ExpUniform);
    EXPECT_THROW(c.validate(), ValidationError);
    c.thetas = {0.5};
    EXPECT_NO_THROW(c.validate());
    c.measure = Measure::PageRank;
    EXPECT_THROW(c.validate(), ValidationError);

    auto r = base(Command::ExpRandom);
    r.interval = Interval{0.0, 1.0, true};
    r.runs = 0;
    EXPECT_THROW(r.validate(), ValidationError);
    r.runs = 2;
    EXPECT_NO_THROW(r.validate());

    auto m = base(Command::ExpCentrality);
    m.measure = Measure::LTR;
    EXPECT_THROW(m.validate(), ValidationError);
    m.measure = Measure::FLTR;
    EXPECT_NO_THROW(m.validate());

    auto u = base(Command::ExpUniform);
    u.thetas = {0.5, 1.2};
    EXPECT_THROW(u.validate(), ValidationError);
}

TEST(Config, JsonRoundTrip) {
    auto c = base(Command::ExpRandom);
    c.interval = Interval{0.0, 0.5, true};
    c.runs = 20;
    c.seed = 12345678901234ULL;
    c.top_on_mean = true;
    c.icr.p = 0.05;
    c.pagerank.alpha = 0.9;
    c.metrics.values_cut = ValuesCut::Floor;
    c.metrics.rule = ActivationRule::Exceeds;
    c.betweenness.normalization = BetweennessNormalization::UnorderedPairs;
    c.network = "syn";
    const ExperimentConfig back = config_from_json(config_to_json(c));
    EXPECT_EQ(config_to_json(back), config_to_json(c));
    EXPECT_EQ(back.seed, c.seed);
    EXPECT_EQ(back.interval->hi, 0.5);
    EXPECT_TRUE(back.interval->lo_exclusive);
    EXPECT_EQ(back.metrics.rule, ActivationRule::Exceeds);
}

TEST(Config, PartialJsonOverridesBase) {
    auto c = base(Command::ExpUniform);
    c.thetas = {0.5};
    const auto merged = config_from_json(R"({"theta": [0.25, 1.0], "seed": 9})", c);
    EXPECT_EQ(merged.thetas, (std::vector<double>{0.25, 1.0}));
    EXPECT_EQ(merged.seed, 9u);
    EXPECT_EQ(merged.graph_path, kSynthetic);
}

TEST(Config, RejectsUnknownKeysAndBadJson) {
    EXPECT_THROW(config_from_json(R"({"thetas": [0.5]})"), ValidationError);
    EXPECT_THROW(config_from_json(R"({"measure": "Katz"})"), ValidationError);
    EXPECT_THROW(config_from_json(R"({"runs": "many"})"), ValidationError);
    EXPECT_THROW(config_from_json("{not json"), DataError);
}

TEST(Uniform, TriangleReportsTop10InRow) {
    auto c = base(Command::ExpUniform, kTriangle);
    c.thetas = {0.5};
    const Graph g = load_graph(c);
    const ExperimentReport r = run_uniform(g, c);
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_FALSE(r.rows[0].metrics->top10.has_value());
    EXPECT_NE(r.rows[0].status.find("n >= 10"), std::string::npos);
}

TEST(Uniform, OneRowPerTheta) {
    auto c = base(Command::ExpUniform);
    c.thetas = parse_theta_list("0.20:0.50:0.02");
    const Graph g = load_graph(c);
    const ExperimentReport r = run_uniform(g, c);
    ASSERT_EQ(r.rows.size(), 16u);
    EXPECT_EQ(r.rows[3].param, "0.26");
    for (const auto& row : r.rows) {
        EXPECT_EQ(row.status, "ok");
        EXPECT_EQ(row.metrics->top10pct_actors->seed_count, g.node_count() / 10);
    }
}

TEST(Uniform, MatchesHandBuiltPipeline) {
    auto c = base(Command::ExpUniform);
    c.thetas = {0.5};
    const Graph g = load_graph(c);
    const ExperimentReport r = run_uniform(g, c);
    const ThresholdAssignment half{std::vector<double>(g.node_count(), 0.5), {"centrality", "const", 0}};
    const MetricsRow expect = metrics_row(g, fltr(g, half), half);
    const MetricsRow& got = *r.rows[0].metrics;
    EXPECT_EQ(got.sigma, expect.sigma);
    EXPECT_EQ(got.distinct, expect.distinct);
    EXPECT_EQ(got.gini, expect.gini);
    EXPECT_EQ(got.top10, expect.top10);
    EXPECT_EQ(got.top10pct_actors->fraction, expect.top10pct_actors->fraction);
    EXPECT_EQ(got.top10pct_values->fraction, expect.top10pct_values->fraction);
}

TEST(Random, DegenerateIntervalEqualsUniform) {
    auto u = base(Command::ExpUniform);
    u.thetas = {0.5};
    auto r = base(Command::ExpRandom);
    r.interval = Interval{0.5, 0.5, false};
    r.runs = 4;
    const Graph g = load_graph(u);
    const MetricsRow a = *run_uniform(g, u).rows[0].metrics;
    const MetricsRow b = *run_random(g, r).rows[0].metrics;
    EXPECT_EQ(a.sigma, b.sigma);
    EXPECT_EQ(a.distinct, b.distinct);
    EXPECT_EQ(a.gini, b.gini);
    EXPECT_EQ(a.top10, b.top10);
    EXPECT_EQ(a.top10pct_actors->fraction, b.top10pct_actors->fraction);
    EXPECT_EQ(a.top10pct_values->fraction, b.top10pct_values->fraction);
    EXPECT_EQ(a.top10pct_values->seed_count, b.top10pct_values->seed_count);
}

TEST(Random, SingleRunEqualsOnePipeline) {
    auto r = base(Command::ExpRandom);
    r.interval = Interval{0.0, 1.0, true};
    r.runs = 1;
    r.seed = 31;
    const Graph g = load_graph(r);
    const ThresholdAssignment theta = random_scheme(g, *r.interval, r.seed)(0);
    const MetricsRow expect = metrics_row(g, fltr(g, theta), theta);
    for (bool on_mean : {false, true}) {
        r.top_on_mean = on_mean;
        const MetricsRow got = *run_random(g, r).rows[0].metrics;
        EXPECT_EQ(got.sigma, expect.sigma);
        EXPECT_EQ(got.distinct, expect.distinct);
        EXPECT_EQ(got.top10, expect.top10);
        EXPECT_EQ(got.top10pct_actors->fraction, expect.top10pct_actors->fraction);
        EXPECT_EQ(got.top10pct_values->fraction, expect.top10pct_values->fraction);
    }
}

TEST(Centrality, BetweennessComplementOnK4) {
    std::istringstream in("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    const Graph g = load_edge_list(in, {});
    auto c = base(Command::ExpCentrality, "k4");
    c.measure = Measure::Betweenness;
    c.complement = true;
    const ExperimentReport r = run_centrality(g, c);
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_EQ(r.rows[0].param, "1-Btwn");
    EXPECT_EQ(r.rows[0].thresholds->min, 1.0);
    EXPECT_EQ(r.rows[0].thresholds->max, 1.0);
    // theta = 1 everywhere; FLTR seeds {i} + N(i) = V already, so every node
    // ranks 1 and the top-values set is all of V.
    EXPECT_EQ(r.rows[0].metrics->distinct, 1u);
    EXPECT_EQ(r.rows[0].metrics->top10pct_values->fraction, 1.0);
}

TEST(Centrality, AllMeasuresProduceRows) {
    for (Measure m : {Measure::Betweenness, Measure::PageRank, Measure::ICR, Measure::FLTR}) {
        for (bool comp : {false, true}) {
            auto c = base(Command::ExpCentrality);
            c.measure = m;
            c.complement = comp;
            c.icr.runs = 5;
            const Graph g = load_graph(c);
            const ExperimentReport r = run_centrality(g, c);
            ASSERT_EQ(r.rows.size(), 1u);
            EXPECT_EQ(r.rows[0].status, "ok") << label(m);
            EXPECT_LE(r.rows[0].thresholds->max, 1.0);
            EXPECT_GE(r.rows[0].thresholds->min, 0.0);
        }
    }
}

TEST(Report, ThreadCountDoesNotChangeCsv) {
    auto c = base(Command::ExpRandom);
    c.interval = Interval{0.0, 1.0, true};
    c.runs = 5;
    const Graph g = load_graph(c);
    c.threads = 1;
    const std::string one = csv(run_random(g, c));
    c.threads = 8;
    EXPECT_EQ(csv(run_random(g, c)), one);
}

TEST(Report, MetaConfigReplaysToSameCsv) {
    auto c = base(Command::ExpCentrality);
    c.measure = Measure::ICR;
    c.icr.runs = 7;
    c.seed = 4;
    const Graph g = load_graph(c);
    const ExperimentReport first = run_centrality(g, c);
    std::ostringstream meta;
    write_report_meta(first, meta);
    const ExperimentConfig replay = config_from_json(meta.str());
    EXPECT_EQ(csv(run_centrality(load_graph(replay), replay)), csv(first));
}

TEST(Report, CsvShape) {
    auto c = base(Command::ExpUniform);
    c.thetas = {0.25, 1.0};
    c.network = "a,b";
    const Graph g = load_graph(c);
    const std::string text = csv(run_uniform(g, c));
    std::istringstream lines(text);
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header.rfind("network,scheme,param,sigma,distinct,gini,top10,top10pA,szA,top10pV,szV", 0), 0u);
    std::string row;
    std::getline(lines, row);
    EXPECT_EQ(row.rfind("\"a,b\",uniform,0.25,", 0), 0u);
}

TEST(Stats, RowFormat) {
    auto c = base(Command::Stats, kTriangle);
    const Graph g = load_graph(c);
    std::ostringstream out;
    write_stats_header(out);
    write_stats_row(c.network_label(), run_stats(g, c), out);
    EXPECT_EQ(out.str(),
              "network,n,m,directed,weighted,acc,diameter,main_core\n"
              "triangle,3,3,undirected,unweighted,1,1,3\n");
}
