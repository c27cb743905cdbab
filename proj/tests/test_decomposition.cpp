#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "tmk/decomposition.hpp"
#include "tmk/errors.hpp"
#include "tmk/sparsity.hpp"

using namespace tmk;

namespace {

bool has_kind(const ValidationResult& r, ViolationKind k) {
    for (const auto& v : r.violations) {
        if (v.kind == k) return true;
    }
    return false;
}

}  // namespace

TEST(Decomposition, ValidatorNamesEachViolation) {
    const Graph g = path_graph(3);
    TreeDecomposition ok{{{0, 1}, {1, 2}}, {{0, 1}}, 0};
    EXPECT_TRUE(validate(g, ok).ok);
    EXPECT_EQ(ok.width(), 1);

    TreeDecomposition uncovered{{{0, 1}}, {}, 0};
    EXPECT_TRUE(has_kind(validate(g, uncovered), ViolationKind::UncoveredVertex));
    TreeDecomposition edge_missing{{{0, 1}, {2}}, {{0, 1}}, 0};
    EXPECT_TRUE(has_kind(validate(g, edge_missing), ViolationKind::UncoveredEdge));
    TreeDecomposition split{{{0, 1}, {2}, {1, 2}}, {{0, 1}, {1, 2}}, 0};
    EXPECT_TRUE(has_kind(validate(g, split), ViolationKind::DisconnectedOccurrence));
    TreeDecomposition cyclic{{{0, 1}, {1, 2}, {1}}, {{0, 1}, {1, 2}, {2, 0}}, 0};
    EXPECT_TRUE(has_kind(validate(g, cyclic), ViolationKind::NotATree));
    TreeDecomposition bad{{{0, 1, 7}, {1, 2}}, {{0, 1}}, 0};
    EXPECT_TRUE(has_kind(validate(g, bad), ViolationKind::BadVertex));
}

TEST(Decomposition, KnownTreewidths) {
    EXPECT_EQ(treewidth_exact(path_graph(6), 10).width, 1);
    EXPECT_EQ(treewidth_exact(cycle_graph(6), 10).width, 2);
    EXPECT_EQ(treewidth_exact(complete_graph(5), 10).width, 4);
    EXPECT_EQ(treewidth_exact(grid_graph(3, 3), 10).width, 3);
    EXPECT_EQ(treewidth_exact(petersen_graph(), 10).width, 4);
    EXPECT_FALSE(treewidth_exact(complete_graph(5), 2).width.has_value());
    EXPECT_THROW(treewidth_exact(complete_graph(16), 20), CapabilityError);
}

TEST(DecompositionProperty, ExactMatchesOrderingEnumeration) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::random_graph(rng, 1 + trial % 8, 0.2 + 0.1 * (trial % 5));
        const ExactTreewidth ex = treewidth_exact(g, 10);
        ASSERT_TRUE(ex.width && ex.decomposition);
        EXPECT_EQ(*ex.width, oracle::treewidth(g)) << "trial " << trial;
        EXPECT_TRUE(validate(g, *ex.decomposition).ok);
        EXPECT_EQ(ex.decomposition->width(), *ex.width);
    }
}

TEST(DecompositionProperty, HeuristicAndOrderingDecompositionsAreValid) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(rng, 2 + trial % 12, 0.3);
        const TreeDecomposition h = tree_decomposition_heuristic(g);
        EXPECT_TRUE(validate(g, h).ok);
        if (g.n() <= 8) {
            EXPECT_GE(h.width(), oracle::treewidth(g));
        }
        std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const TreeDecomposition o = decomposition_from_ordering(g, order);
        EXPECT_TRUE(validate(g, o).ok);
        EXPECT_EQ(o.width(), ordering_width(g, order));
        EXPECT_TRUE(validate(g, compact(o)).ok);
    }
}

TEST(Decomposition, RootedForestCoversComponentsOfGMinusX) {
    // Two triangles sharing vertex 0; removing it leaves two edges.
    const Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    const ForestDecomposition fd = rooted_forest_decomposition(g, {0}, 1);
    EXPECT_EQ(fd.tree_count(), 2);
    EXPECT_LE(fd.max_bag_size(), 2);
    EXPECT_EQ(fd.components[0], (VertexSet{1, 2}));
    EXPECT_THROW(rooted_forest_decomposition(g, {}, 1), PreconditionError);
}

TEST(DecompositionProperty, ForestDecompositionOfForestsHasBagsOfTwo) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(rng, 3 + trial % 14, 0.15);
        if (!is_forest(g)) continue;
        const ForestDecomposition fd = rooted_forest_decomposition(g, {}, 1);
        EXPECT_LE(fd.max_bag_size(), 2);
        EXPECT_EQ(fd.tree_count(), static_cast<int>(connected_components(g).size()));
        for (int t = 0; t < fd.tree_count(); ++t) {
            EXPECT_EQ(fd.bfs_order(t).size(), fd.nodes_of_tree[static_cast<std::size_t>(t)].size());
            EXPECT_EQ(fd.subtree(fd.roots[static_cast<std::size_t>(t)]).size(), fd.bfs_order(t).size());
        }
    }
}

TEST(Decomposition, InducedBySubtreeRejectsDisconnectedNodeSets) {
    const Graph g = path_graph(5);
    const ForestDecomposition fd = rooted_forest_decomposition(g, {}, 1);
    ASSERT_GE(fd.node_count(), 3);
    const auto all = fd.bfs_order(0);
    EXPECT_EQ(induced_by_subtree(g, fd, all).graph.n(), 5);
    std::vector<Node> leaves;
    for (Node b = 0; b < fd.node_count(); ++b) {
        if (fd.adj[static_cast<std::size_t>(b)].size() == 1) leaves.push_back(b);
    }
    ASSERT_EQ(leaves.size(), 2u);
    EXPECT_THROW(induced_by_subtree(g, fd, leaves), InputError);
}
