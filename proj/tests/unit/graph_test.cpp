#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "infrank/errors.hpp"
#include "infrank/graph.hpp"
#include "infrank/graph_io.hpp"
#include "oracles.hpp"

using namespace infrank;

namespace {

Graph load(const std::string& text, bool directed = false, bool weighted = false) {
    std::istringstream in(text);
    return load_edge_list(in, {directed, weighted});
}

std::vector<NodeId> vec(std::span<const NodeId> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(LoadEdgeList, CommentsAndDenseReindexing) {
    const Graph g = load("# c\n1 2\n2 3", true);
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(vec(g.out_neighbors(0)), std::vector<NodeId>{1});
    EXPECT_EQ(g.original_id(2), 3);
}

TEST(LoadEdgeList, DuplicateArcCollapsed) {
    EXPECT_EQ(load("1 2\n1 2", true).edge_count(), 1u);
}

TEST(LoadEdgeList, ReverseDuplicateCollapsedWhenUndirected) {
    const Graph g = load("1 2\n2 1\n");
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_EQ(g.arc_count(), 2u);
    EXPECT_EQ(load("1 2\n2 1\n", true).edge_count(), 2u);
}

TEST(LoadEdgeList, SelfLoopsDroppedButCounted) {
    const Graph g = load("1 1\n1 2\n5 5\n");
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_EQ(g.self_loop_count(), 2u);
    EXPECT_TRUE(g.neighbors(*g.index_of(5)).empty());
}

TEST(LoadEdgeList, SparseOriginalIdsAreSorted) {
    const Graph g = load("900 -3\n17 900\n");
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.original_id(0), -3);
    EXPECT_EQ(g.original_id(1), 17);
    EXPECT_EQ(g.original_id(2), 900);
    EXPECT_EQ(g.index_of(17), NodeId{1});
    EXPECT_FALSE(g.index_of(18).has_value());
}

TEST(LoadEdgeList, TabsAndTrailingColumns) {
    const Graph g = load("1\t2\t99 extra\n\n2   3\r\n", true);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_FALSE(g.weighted());
}

TEST(LoadEdgeList, WeightsReadWhenRequested) {
    const Graph g = load("1 2 0.5\n2 3 1.5\n", true, true);
    EXPECT_TRUE(g.weighted());
    ASSERT_EQ(g.out_weights(0).size(), 1u);
    EXPECT_DOUBLE_EQ(g.out_weights(0)[0], 0.5);
    EXPECT_DOUBLE_EQ(g.out_weights(1)[0], 1.5);
}

TEST(LoadEdgeList, NonIntegerEndpointReportsLine) {
    try {
        load("1 2\n2 x\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(LoadEdgeList, MissingTargetIsParseError) {
    EXPECT_THROW(load("1 2\n3\n"), ParseError);
    EXPECT_THROW(load("1.5 2\n"), ParseError);
}

TEST(LoadEdgeList, NegativeWeightIsValidationError) {
    EXPECT_THROW(load("1 2 1\n2 3 -1\n", false, true), ValidationError);
    EXPECT_THROW(load("1 2 abc\n", false, true), ParseError);
}

TEST(LoadEdgeList, EmptyInputIsValidationError) {
    EXPECT_THROW(load("# only comments\n\n"), ValidationError);
    EXPECT_THROW(load(""), ValidationError);
}

TEST(LoadEdgeList, MissingFileIsDataError) {
    EXPECT_THROW(load_edge_list_file("/nonexistent/graph.txt", {}), DataError);
}

TEST(LoadEdgeList, FileErrorsNameThePath) {
    try {
        load_edge_list_file(INFRANK_TEST_DATA "/bad_endpoint.txt", {});
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("bad_endpoint.txt"), std::string::npos);
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(Neighborhood, PathMiddleNode) {
    const Graph g = load("0 1\n1 2\n", true);
    EXPECT_EQ(vec(neighborhood(g, 1)), (std::vector<NodeId>{0, 2}));
    EXPECT_EQ(vec(out_neighborhood(g, 1)), std::vector<NodeId>{2});
}

TEST(Neighborhood, IsolatedAndSink) {
    const Graph g = load("0 1\n7 7\n", true);
    EXPECT_TRUE(neighborhood(g, *g.index_of(7)).empty());
    EXPECT_TRUE(out_neighborhood(g, 1).empty());
}

TEST(Neighborhood, UnionOfDirections) {
    const Graph g = load("0 1\n2 0\n", true);
    EXPECT_EQ(vec(neighborhood(g, 0)), (std::vector<NodeId>{1, 2}));
}

TEST(Neighborhood, UndirectedStoredBothWays) {
    const Graph g = load("0 1\n");
    EXPECT_EQ(vec(out_neighborhood(g, 0)), std::vector<NodeId>{1});
    EXPECT_EQ(vec(out_neighborhood(g, 1)), std::vector<NodeId>{0});
}

TEST(Neighborhood, OutOfRangeThrows) {
    const Graph g = load("0 1\n");
    EXPECT_THROW(neighborhood(g, 2), ValidationError);
    EXPECT_THROW(out_neighborhood(g, 99), ValidationError);
}

TEST(GraphProperty, AdjacencySortedUniqueAndInRange) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const bool directed = trial % 2 == 0;
        const auto e = oracle::random_edges(rng, 1 + rng() % 100, 0.05, directed);
        const Graph g = e.build();
        std::size_t arcs = 0;
        for (NodeId i = 0; i < g.node_count(); ++i) {
            for (auto row : {g.out_neighbors(i), g.in_neighbors(i), g.neighbors(i)}) {
                EXPECT_TRUE(std::is_sorted(row.begin(), row.end()));
                EXPECT_EQ(std::adjacent_find(row.begin(), row.end()), row.end());
                for (NodeId j : row) {
                    EXPECT_LT(j, g.node_count());
                    EXPECT_NE(j, i);
                }
            }
            arcs += g.out_degree(i);
        }
        EXPECT_EQ(arcs, directed ? g.edge_count() : 2 * g.edge_count());
        if (!directed) {
            for (NodeId i = 0; i < g.node_count(); ++i) {
                for (NodeId j : g.out_neighbors(i)) {
                    const auto back = g.out_neighbors(j);
                    EXPECT_TRUE(std::binary_search(back.begin(), back.end(), i));
                }
            }
        }
    }
}

TEST(GraphProperty, NeighborhoodIsUnionOfInAndOut) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const auto e = oracle::random_edges(rng, 1 + rng() % 100, 0.04, true);
        const Graph g = e.build();
        const oracle::RefGraph ref(e);
        for (NodeId i = 0; i < g.node_count(); ++i) {
            std::vector<NodeId> expect;
            std::set_union(g.out_neighbors(i).begin(), g.out_neighbors(i).end(), g.in_neighbors(i).begin(),
                           g.in_neighbors(i).end(), std::back_inserter(expect));
            EXPECT_EQ(vec(neighborhood(g, i)), expect);
            EXPECT_EQ(std::vector<int>(ref.nbr[i].begin(), ref.nbr[i].end()),
                      std::vector<int>(expect.begin(), expect.end()));
        }
    }
}

TEST(GraphProperty, WriteThenReloadRoundTrips) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const bool directed = trial % 2 == 1;
        const auto e = oracle::random_edges(rng, 1 + rng() % 60, 0.08, directed);
        const Graph g = e.build();
        std::stringstream buf;
        write_edge_list(g, buf);
        const Graph back = load_edge_list(buf, {directed, false});
        EXPECT_EQ(back.node_count(), g.node_count());
        EXPECT_EQ(back.edge_count(), g.edge_count());
        for (NodeId i = 0; i < g.node_count(); ++i) {
            EXPECT_EQ(back.original_id(i), g.original_id(i));
            EXPECT_EQ(vec(back.out_neighbors(i)), vec(g.out_neighbors(i)));
            EXPECT_EQ(vec(back.in_neighbors(i)), vec(g.in_neighbors(i)));
        }
    }
}

TEST(GraphProperty, WeightedRoundTripKeepsWeights) {
    const Graph g = load("1 2 0.1\n2 3 2.5\n3 1 1e-7\n", false, true);
    std::stringstream buf;
    write_edge_list(g, buf);
    const Graph back = load_edge_list(buf, {false, true});
    EXPECT_EQ(back, g);
}
