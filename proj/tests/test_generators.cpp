#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tmk/errors.hpp"
#include "tmk/generators.hpp"

using namespace tmk;

namespace {

int max_degree(const Graph& g) {
    int d = 0;
    for (Vertex v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

}  // namespace

TEST(Generators, SameSeedSameInstance) {
    for (Family f : {Family::PlantedModulator, Family::BoundedDegreeRandom, Family::PendantRich}) {
        GeneratorSpec s;
        s.family = f;
        s.n = 25;
        s.seed = 99;
        const auto a = generate(s);
        const auto b = generate(s);
        EXPECT_EQ(a.instance.graph, b.instance.graph);
        EXPECT_EQ(a.planted, b.planted);
        s.seed = 100;
        EXPECT_NE(generate(s).instance.graph, a.instance.graph) << to_string(f);
    }
}

TEST(Generators, ZeroModulatorGivesForest) {
    GeneratorSpec s;
    s.k = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        s.seed = seed;
        const auto g = generate(s);
        EXPECT_TRUE(is_forest(g.instance.graph));
        EXPECT_TRUE(g.planted.empty());
    }
}

TEST(Generators, InfeasibleSpecIsAnInputError) {
    GeneratorSpec s;
    s.d = 1;
    EXPECT_THROW(generate(s), InputError);
    s = GeneratorSpec{};
    s.k = 30;
    EXPECT_THROW(generate(s), InputError);
    s = GeneratorSpec{};
    s.n = 6;
    s.k = 5;
    s.d = 2;
    EXPECT_THROW(generate(s), InputError);
    EXPECT_THROW(parse_family("grid"), InputError);
}

TEST(GeneratorsProperty, PlantedSetIsASolutionAndDegreeCapHolds) {
    for (ProblemId p : {ProblemId::FVS, ProblemId::VC}) {
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            GeneratorSpec s;
            s.problem = p;
            s.n = 10 + static_cast<int>(seed % 10);
            s.k = 1 + static_cast<int>(seed % 4);
            s.d = 3 + static_cast<int>(seed % 2);
            s.seed = seed;
            const auto g = generate(s);
            EXPECT_LE(max_degree(g.instance.graph), s.d);
            EXPECT_EQ(static_cast<int>(g.planted.size()), s.k);
            EXPECT_TRUE(is_solution(p, g.instance.graph, g.planted));
            const int opt = p == ProblemId::FVS ? oracle::min_fvs(g.instance.graph) : oracle::min_vc(g.instance.graph);
            EXPECT_LE(opt, s.k);
        }
    }
}

TEST(GeneratorsProperty, UnplantedFamiliesRespectDegreeCap) {
    for (Family f : {Family::BoundedDegreeRandom, Family::PendantRich}) {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            GeneratorSpec s;
            s.family = f;
            s.n = 30;
            s.d = 2 + static_cast<int>(seed % 3);
            s.seed = seed;
            EXPECT_LE(max_degree(generate(s).instance.graph), s.d);
        }
    }
}

TEST(Generators, UniformBelowStaysInRange) {
    std::mt19937_64 rng(1);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) ++hits[uniform_below(rng, 7)];
    for (int h : hits) EXPECT_GT(h, 800);
    EXPECT_THROW(uniform_below(rng, 0), InputError);
}
