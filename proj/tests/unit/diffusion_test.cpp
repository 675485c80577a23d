#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "infrank/diffusion.hpp"
#include "infrank/errors.hpp"
#include "infrank/graph_io.hpp"
#include "oracles.hpp"

using namespace infrank;
using infrank::oracle::make_theta;

namespace {

Graph load(const std::string& text, bool directed = false) {
    std::istringstream in(text);
    return load_edge_list(in, {directed, false});
}

ThresholdAssignment constant(const Graph& g, double t) {
    return make_theta(std::vector<double>(g.node_count(), t));
}

}  // namespace

TEST(LtSpread, PathHalfThreshold) {
    const Graph g = load("0 1\n1 2\n2 3\n");
    const std::vector<NodeId> seeds{0};
    const SpreadResult r = lt_spread(g, seeds, constant(g, 0.5));
    EXPECT_EQ(r.active, (std::vector<NodeId>{0, 1, 2, 3}));
    EXPECT_EQ(r.steps, 3u);
    ASSERT_EQ(r.trace.size(), 4u);
    EXPECT_EQ(r.trace[0], std::vector<NodeId>{0});
    EXPECT_EQ(r.trace[3], std::vector<NodeId>{3});
}

TEST(LtSpread, SeededStarCenterUnderFullThreshold) {
    const Graph g = load("0 1\n0 2\n0 3\n");
    const std::vector<NodeId> seeds{0};
    const SpreadResult r = lt_spread(g, seeds, constant(g, 1.0));
    EXPECT_EQ(r.active.size(), 4u);
    EXPECT_EQ(r.steps, 1u);
}

TEST(LtSpread, AllSeededIsFixedPoint) {
    const Graph g = load("0 1\n1 2\n2 0\n2 3\n");
    std::vector<NodeId> all(g.node_count());
    std::iota(all.begin(), all.end(), NodeId{0});
    const SpreadResult r = lt_spread(g, all, constant(g, 0.7));
    EXPECT_EQ(r.active, all);
    EXPECT_EQ(r.steps, 0u);
}

TEST(LtSpread, ZeroThresholdActivatesNonIsolatedInStepOne) {
    const Graph g = load("0 1\n2 3\n5 5\n");
    const SpreadResult r = lt_spread(g, {}, constant(g, 0.0));
    EXPECT_EQ(r.active, (std::vector<NodeId>{0, 1, 2, 3}));
    EXPECT_EQ(r.steps, 1u);
}

TEST(LtSpread, IsolatedNodeOnlyWhenSeeded) {
    const Graph g = load("0 1\n5 5\n");
    const NodeId iso = *g.index_of(5);
    EXPECT_EQ(lt_spread(g, std::vector<NodeId>{0}, constant(g, 0.0)).active.size(), 2u);
    EXPECT_EQ(lt_spread(g, std::vector<NodeId>{iso}, constant(g, 0.0)).active.size(), 3u);
}

TEST(LtSpread, StrictRuleNeedsMoreThanThreshold) {
    const Graph g = load("0 1\n1 2\n2 3\n");
    const std::vector<NodeId> seeds{0};
    EXPECT_EQ(lt_spread(g, seeds, constant(g, 0.5), ActivationRule::Exceeds).active, seeds);
    EXPECT_EQ(lt_spread(g, seeds, constant(g, 0.5)).active.size(), 4u);
    const std::vector<NodeId> ends{0, 2};
    EXPECT_EQ(lt_spread(g, ends, constant(g, 0.5), ActivationRule::Exceeds).active,
              (std::vector<NodeId>{0, 1, 2, 3}));
}

TEST(LtSpread, RejectsBadInput) {
    const Graph g = load("0 1\n");
    const std::vector<NodeId> bad_seed{7};
    EXPECT_THROW(lt_spread(g, bad_seed, constant(g, 0.5)), ValidationError);
    EXPECT_THROW(lt_spread(g, {}, make_theta({0.5})), ValidationError);
    EXPECT_THROW(lt_spread(g, {}, make_theta({0.5, 1.5})), ValidationError);
}

TEST(LtSpread, RepeatedSeedsAreHarmless) {
    const Graph g = load("0 1\n1 2\n");
    const std::vector<NodeId> seeds{0, 0, 0};
    EXPECT_EQ(lt_spread(g, seeds, constant(g, 0.5)).active.size(), 3u);
}

TEST(LtSpread, TraceIsDisjointAndCoversActive) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto e = oracle::random_edges(rng, 2 + rng() % 40, 0.1, trial % 2 == 0);
        const Graph g = e.build();
        const auto theta = make_theta(oracle::random_thetas(rng, e.n));
        const std::vector<NodeId> seeds{NodeId(rng() % e.n)};
        const SpreadResult r = lt_spread(g, seeds, theta);
        std::vector<NodeId> all;
        for (const auto& step : r.trace) all.insert(all.end(), step.begin(), step.end());
        std::sort(all.begin(), all.end());
        EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
        EXPECT_EQ(all, r.active);
        EXPECT_LE(r.steps, e.n);
        EXPECT_EQ(r.trace.size(), r.steps + 1);
        EXPECT_TRUE(std::includes(r.active.begin(), r.active.end(), seeds.begin(), seeds.end()));
    }
}

TEST(LtSpread, MatchesNaiveOracleBothRules) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 300; ++trial) {
        const auto e = oracle::random_edges(rng, 1 + rng() % 8, 0.35, trial % 2 == 0);
        const Graph g = e.build();
        const oracle::RefGraph ref(e);
        const auto values = oracle::random_thetas(rng, e.n);
        const auto theta = make_theta(values);
        for (auto rule : {ActivationRule::AtLeast, ActivationRule::Exceeds}) {
            const LinearThreshold engine(g, theta, rule);
            LinearThreshold::Workspace ws;
            for (NodeId a = 0; a < e.n; ++a) {
                const std::vector<NodeId> seeds{a};
                const auto oracle = oracle::naive_lt(ref, {int(a)}, values, rule);
                const SpreadResult r = engine.spread(seeds, ws);
                EXPECT_EQ(std::set<NodeId>(r.active.begin(), r.active.end()),
                          std::set<NodeId>(oracle.active.begin(), oracle.active.end()));
                EXPECT_EQ(r.steps, oracle.steps);
                EXPECT_EQ(engine.spread_size(seeds, ws), oracle.active.size());
            }
        }
    }
}

TEST(LtSpread, SeedSetMonotone) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        const auto e = oracle::random_edges(rng, 2 + rng() % 30, 0.15, trial % 2 == 0);
        const Graph g = e.build();
        const LinearThreshold engine(g, make_theta(oracle::random_thetas(rng, e.n)));
        LinearThreshold::Workspace ws;
        std::vector<NodeId> x{NodeId(rng() % e.n)};
        std::vector<NodeId> y = x;
        y.push_back(NodeId(rng() % e.n));
        y.push_back(NodeId(rng() % e.n));
        const auto fx = engine.spread(x, ws).active;
        const auto fy = engine.spread(y, ws).active;
        EXPECT_TRUE(std::includes(fy.begin(), fy.end(), fx.begin(), fx.end()));
    }
}

TEST(LtSpread, PureFunctionOfInputs) {
    std::mt19937_64 rng(34);
    const auto e = oracle::random_edges(rng, 60, 0.08, true);
    const Graph g = e.build();
    const auto theta = make_theta(oracle::random_thetas(rng, e.n));
    const std::vector<NodeId> seeds{3, 17};
    const SpreadResult a = lt_spread(g, seeds, theta);
    const LinearThreshold engine(g, theta);
    LinearThreshold::Workspace ws;
    for (int i = 0; i < 5; ++i) engine.spread(std::vector<NodeId>{NodeId(i)}, ws);
    const SpreadResult b = engine.spread(seeds, ws);
    EXPECT_EQ(a.active, b.active);
    EXPECT_EQ(a.trace, b.trace);
}

TEST(LtSpread, TraceDumpUsesOriginalIds) {
    const Graph g = load("10 20\n20 30\n");
    const SpreadResult r = lt_spread(g, std::vector<NodeId>{0}, constant(g, 0.5));
    std::ostringstream out;
    write_trace(g, r, out);
    EXPECT_EQ(out.str(), "0\t10\n1\t20\n2\t30\n");
}

TEST(IcSpread, ZeroProbabilityReturnsSeeds) {
    const Graph g = load("0 1\n1 2\n2 3\n", true);
    Rng rng(1);
    const std::vector<NodeId> seeds{1, 0};
    EXPECT_EQ(ic_spread(g, seeds, 0.0, rng), (std::vector<NodeId>{0, 1}));
}

TEST(IcSpread, FullProbabilityIsForwardReachability) {
    const Graph g = load("0 1\n1 2\n3 1\n", true);
    Rng rng(1);
    EXPECT_EQ(ic_spread(g, std::vector<NodeId>{1}, 1.0, rng), (std::vector<NodeId>{1, 2}));
    EXPECT_EQ(ic_spread(g, std::vector<NodeId>{3}, 1.0, rng), (std::vector<NodeId>{1, 2, 3}));
}

TEST(IcSpread, SingleArcBernoulliMean) {
    const Graph g = load("0 1\n", true);
    const IndependentCascade ic(g, 0.5);
    IndependentCascade::Workspace ws;
    Rng rng(2024);
    const std::vector<NodeId> seeds{0};
    int hits = 0;
    constexpr int trials = 10000;
    for (int t = 0; t < trials; ++t) hits += ic.spread_size(seeds, rng, ws) == 2;
    EXPECT_NEAR(hits / double(trials), 0.5, 0.02);
}

TEST(IcSpread, DeterministicUnderSeed) {
    std::mt19937_64 gen(35);
    const auto e = oracle::random_edges(gen, 80, 0.06, true);
    const Graph g = e.build();
    const std::vector<NodeId> seeds{0, 5};
    Rng a(99);
    Rng b(99);
    EXPECT_EQ(ic_spread(g, seeds, 0.3, a), ic_spread(g, seeds, 0.3, b));
}

TEST(IcSpread, RejectsBadProbability) {
    const Graph g = load("0 1\n", true);
    Rng rng(1);
    EXPECT_THROW(ic_spread(g, std::vector<NodeId>{0}, 1.5, rng), ValidationError);
    EXPECT_THROW(ic_spread(g, std::vector<NodeId>{0}, -0.1, rng), ValidationError);
    EXPECT_THROW(ic_spread(g, std::vector<NodeId>{4}, 0.5, rng), ValidationError);
}
