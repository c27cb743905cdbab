#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tmk/errors.hpp"
#include "tmk/solvers.hpp"
#include "tmk/sparsity.hpp"

using namespace tmk;

TEST(Solvers, KnownOptima) {
    EXPECT_EQ(exact_solve(ProblemId::FVS, complete_graph(5)).value, 3);
    EXPECT_EQ(exact_solve(ProblemId::VC, complete_graph(5)).value, 4);
    EXPECT_EQ(exact_solve(ProblemId::FVS, petersen_graph()).value, 3);
    EXPECT_EQ(exact_solve(ProblemId::VC, petersen_graph()).value, 6);
    EXPECT_EQ(exact_solve(ProblemId::FVS, grid_graph(3, 3)).value, 2);
    EXPECT_EQ(exact_solve(ProblemId::FVS, Graph(0)).value, 0);
    EXPECT_THROW(exact_solve(ProblemId::VC, Graph(30), 25), CapabilityError);
}

TEST(Solvers, MultigraphLoopsAndParallelEdges) {
    Multigraph m;
    m.n = 2;
    m.edges = {{0, 1}, {0, 1}};
    m.deletable = {1, 1};
    ASSERT_TRUE(min_feedback_vertex_set(m).has_value());
    EXPECT_EQ(min_feedback_vertex_set(m)->size(), 1u);
    m.deletable = {0, 0};
    EXPECT_FALSE(min_feedback_vertex_set(m).has_value());
    m.edges = {{1, 1}};
    m.deletable = {1, 0};
    EXPECT_FALSE(min_feedback_vertex_set(m).has_value());
}

TEST(SolversProperty, ExactMatchesSubsetEnumeration) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(rng, trial % 13, 0.15 + 0.05 * (trial % 8));
        const Solution f = exact_solve(ProblemId::FVS, g);
        EXPECT_EQ(f.value, oracle::min_fvs(g));
        EXPECT_EQ(static_cast<int>(f.witness.size()), f.value);
        EXPECT_TRUE(is_solution(ProblemId::FVS, g, f.witness));
        const Solution v = exact_solve(ProblemId::VC, g);
        EXPECT_EQ(v.value, oracle::min_vc(g));
        EXPECT_TRUE(is_solution(ProblemId::VC, g, v.witness));
    }
}

TEST(SolversProperty, ApproximationsAreFeasibleWithinFactor) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(rng, 4 + trial % 11, 0.3);
        const VertexSet f = approx_feedback_vertex_set(g);
        EXPECT_TRUE(is_solution(ProblemId::FVS, g, f));
        EXPECT_GE(static_cast<int>(f.size()), oracle::min_fvs(g));
        const VertexSet v = approx_vertex_cover(g);
        EXPECT_TRUE(is_solution(ProblemId::VC, g, v));
        EXPECT_LE(static_cast<int>(v.size()), 2 * oracle::min_vc(g));
    }
}

TEST(Solvers, ProblemNames) {
    EXPECT_EQ(parse_problem("fvs"), ProblemId::FVS);
    EXPECT_EQ(parse_problem("VC"), ProblemId::VC);
    EXPECT_EQ(to_string(ProblemId::FVS), "FVS");
    EXPECT_THROW(parse_problem("dominating-set"), InputError);
}
