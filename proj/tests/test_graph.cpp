#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tmk/errors.hpp"
#include "tmk/graph.hpp"
#include "tmk/sparsity.hpp"

using namespace tmk;

TEST(Graph, ParallelEdgesMergeAndSelfLoopsReject) {
    const Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
    EXPECT_EQ(g.m(), 2u);
    EXPECT_TRUE(g.has_edge(1, 0));
    EXPECT_FALSE(g.has_edge(0, 2));
    EXPECT_THROW(Graph(2, {{1, 1}}), InputError);
    EXPECT_THROW(Graph(2, {{0, 2}}), InputError);
}

TEST(Graph, SetHelpers) {
    EXPECT_EQ(set_union({1, 3}, {2, 3}), (VertexSet{1, 2, 3}));
    EXPECT_EQ(set_intersection({1, 3, 5}, {3, 4, 5}), (VertexSet{3, 5}));
    EXPECT_EQ(set_difference({1, 3, 5}, {3}), (VertexSet{1, 5}));
    const Graph g = path_graph(4);
    EXPECT_EQ(make_vertex_set(g, {3, 1, 3}), (VertexSet{1, 3}));
    EXPECT_THROW(make_vertex_set(g, {4}), InputError);
}

TEST(Graph, BoundaryNeighborhoodAndDegreeWrt) {
    const Graph g = path_graph(5);  // 0-1-2-3-4
    EXPECT_EQ(boundary(g, {1, 2}), (VertexSet{1, 2}));
    EXPECT_EQ(boundary(g, {0, 1, 2}), (VertexSet{2}));
    EXPECT_EQ(neighborhood(g, {1, 2}), (VertexSet{0, 3}));
    EXPECT_EQ(degree_wrt(g, {0, 4}, {1, 2, 3}), 2);
    EXPECT_EQ(degree_wrt(g, {0, 4}, {2}), 0);
}

TEST(Graph, ContractEdgeKeepsMinIdAndMergesNeighbours) {
    const Graph g = cycle_graph(4);
    const Relabeled r = contract_edge(g, {1, 2});
    EXPECT_EQ(r.graph.n(), 3);
    EXPECT_EQ(r.old_to_new[1], r.old_to_new[2]);
    EXPECT_EQ(r.graph.m(), 3u);  // C4 / e = C3
    EXPECT_THROW(contract_edge(g, {0, 2}), InputError);
}

TEST(Graph, InducedFollowsOrderOfS) {
    const Graph g = complete_graph(4);
    const Relabeled r = induced(g, {1, 3});
    EXPECT_EQ(r.graph.n(), 2);
    EXPECT_EQ(r.new_to_old, (std::vector<Vertex>{1, 3}));
    EXPECT_EQ(r.old_to_new[0], -1);
    EXPECT_EQ(r.graph.m(), 1u);
}

TEST(GraphProperty, ForestIffEdgesEqualNMinusComponents) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = oracle::random_graph(rng, 1 + trial % 10, 0.25);
        const auto comps = connected_components(g);
        std::size_t covered = 0;
        for (const auto& c : comps) {
            covered += c.size();
            EXPECT_TRUE(is_connected_within(g, c));
        }
        EXPECT_EQ(covered, static_cast<std::size_t>(g.n()));
        EXPECT_EQ(is_forest(g), g.m() + comps.size() == static_cast<std::size_t>(g.n()));
        EXPECT_EQ(is_forest(g), oracle::acyclic_without(g, 0));
    }
}

TEST(GraphProperty, ContractionDropsOneVertex) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(rng, 3 + trial % 6, 0.5);
        for (const Edge& e : g.edges()) {
            const Relabeled r = contract_edge(g, e);
            EXPECT_EQ(r.graph.n(), g.n() - 1);
            EXPECT_LE(r.graph.m(), g.m() - 1);
            EXPECT_EQ(connected_components(r.graph).size(), connected_components(g).size());
        }
    }
}
