#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tmk/errors.hpp"
#include "tmk/sparsity.hpp"

using namespace tmk;

TEST(Sparsity, AverageDegreeIsExact) {
    EXPECT_EQ(average_degree(complete_graph(4)), Rational(3));
    EXPECT_EQ(average_degree(path_graph(3)), Rational(4, 3));
    EXPECT_THROW(average_degree(Graph(0)), InputError);
}

TEST(Sparsity, CliqueCountsClosedForm) {
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(count_cliques(complete_graph(n)), (1ull << n) - 1);
    EXPECT_EQ(count_cliques(Graph(5)), 5u);
    EXPECT_EQ(count_cliques(path_graph(5)), 9u);
    EXPECT_EQ(count_cliques(petersen_graph()), 25u);
}

TEST(Sparsity, NamedGraphs) {
    EXPECT_EQ(petersen_graph().n(), 10);
    EXPECT_EQ(petersen_graph().m(), 15u);
    EXPECT_EQ(complete_bipartite(3, 3).m(), 9u);
    EXPECT_EQ(grid_graph(3, 4).m(), 17u);
    EXPECT_EQ(star_graph(4).n(), 5);
}

TEST(TopologicalMinor, KnownPairs) {
    EXPECT_FALSE(contains_topological_minor(petersen_graph(), complete_graph(5)));
    EXPECT_TRUE(contains_topological_minor(complete_bipartite(3, 3), complete_graph(4)));
    EXPECT_TRUE(contains_topological_minor(petersen_graph(), complete_bipartite(3, 3)));
    EXPECT_TRUE(contains_topological_minor(cycle_graph(7), cycle_graph(3)));
    EXPECT_FALSE(contains_topological_minor(path_graph(7), cycle_graph(3)));
    EXPECT_FALSE(contains_topological_minor(star_graph(3), star_graph(4)));
    EXPECT_TRUE(contains_topological_minor(Graph(3), Graph(0)));
}

TEST(TopologicalMinor, PatternSizeIsCapped) {
    EXPECT_THROW(contains_topological_minor(complete_graph(8), complete_graph(7)), CapabilityError);
}

TEST(TopologicalMinorProperty, AgreesWithFullEnumeration) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = oracle::random_graph(rng, 4 + trial % 5, 0.45);
        const Graph h = oracle::random_graph(rng, 3 + trial % 2, 0.6);
        EXPECT_EQ(contains_topological_minor(g, h), oracle::topological_minor(g, h)) << "trial " << trial;
    }
}

TEST(SparsityProperty, GridsMeetBothBoundsAtR5) {
    SparsityConstants c;
    c.r = 5;
    for (int rows = 1; rows <= 6; ++rows) {
        const auto check = check_sparsity_bounds(grid_graph(rows, 6), c);
        EXPECT_TRUE(check.holds());
        EXPECT_LT(boost::rational_cast<double>(check.average_degree), 4.0);
    }
}

TEST(Sparsity, TinyConstantsMakeTheCheckFail) {
    SparsityConstants c;
    c.beta = Rational(1, 100);
    c.tau = Rational(1, 100);
    c.r = 2;
    const auto check = check_sparsity_bounds(complete_graph(6), c);
    EXPECT_FALSE(check.degree_holds);
    EXPECT_FALSE(check.cliques_holds);
}
