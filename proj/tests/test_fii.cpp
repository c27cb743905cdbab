#include <gtest/gtest.h>

#include <bit>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tables.hpp"
#include "tmk/errors.hpp"
#include "tmk/fii.hpp"
#include "tmk/sparsity.hpp"

using namespace tmk;

namespace {

// VC value of a state by subset enumeration: smallest cover whose
// intersection with the labels is exactly the state.
int brute_vc_state(const BoundariedGraph& bg, unsigned state) {
    const auto edges = bg.graph.edges();
    int best = kInfinity;
    for (std::uint32_t c = 0; c < (1u << bg.n()); ++c) {
        bool match = true;
        for (int i = 0; i < bg.t(); ++i) match &= ((c >> bg.labels[static_cast<std::size_t>(i)] & 1u) != 0) == ((state >> i & 1u) != 0);
        if (!match) continue;
        bool cover = true;
        for (const Edge& e : edges) cover &= (c >> e.u & 1u) || (c >> e.v & 1u);
        if (cover) best = std::min(best, std::popcount(c));
    }
    return best;
}

// FVS value of a state: each block gets a hub adjacent to its labels (a
// spanning star, which is acyclic exactly when merging the block is);
// count interior deletions only.
int brute_fvs_state(const BoundariedGraph& bg, const FvsState& st) {
    int blocks = 0;
    for (int b : st.block_of) blocks = std::max(blocks, b + 1);
    std::vector<Edge> edges = bg.graph.edges();
    for (int i = 0; i < bg.t(); ++i) {
        const int b = st.block_of[static_cast<std::size_t>(i)];
        if (b >= 0) edges.push_back({bg.labels[static_cast<std::size_t>(i)], bg.n() + b});
    }
    const Graph g(bg.n() + blocks, edges);
    std::uint32_t forced = 0;
    for (int i = 0; i < bg.t(); ++i) {
        if (st.deleted >> i & 1u) forced |= 1u << bg.labels[static_cast<std::size_t>(i)];
    }
    std::uint32_t interior = 0;
    for (Vertex v : bg.interior()) interior |= 1u << v;
    int best = kInfinity;
    for (std::uint32_t d = interior;; d = (d - 1) & interior) {
        if (std::popcount(d) < best && oracle::acyclic_without(g, d | forced)) best = std::popcount(d);
        if (d == 0) break;
    }
    return best;
}

BoundariedGraph random_boundaried(std::mt19937_64& rng, int t, int n) {
    std::vector<Vertex> labels;
    for (int i = 0; i < t; ++i) labels.push_back(i);
    return BoundariedGraph(oracle::random_graph(rng, n, 0.45), labels);
}

int brute_opt(ProblemId p, const Graph& g) {
    return p == ProblemId::FVS ? oracle::min_fvs(g) : oracle::min_vc(g);
}

}  // namespace

TEST(Fii, StateCounts) {
    EXPECT_EQ(fvs_states(0).size(), 1u);
    EXPECT_EQ(fvs_states(1).size(), 2u);
    EXPECT_EQ(fvs_states(2).size(), 5u);
    EXPECT_EQ(fvs_states(3).size(), 15u);  // sum over masks of Bell numbers
    EXPECT_EQ(state_count(ProblemId::VC, 3), 8u);
    EXPECT_THROW(fvs_states(5), CapabilityError);
}

TEST(FiiProperty, VcSignatureMatchesSubsetEnumeration) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const int t = trial % 4;
        const auto bg = random_boundaried(rng, t, t + trial % 6);
        const Signature s = signature_vc(bg);
        ASSERT_EQ(s.values.size(), std::size_t{1} << t);
        for (unsigned state = 0; state < (1u << t); ++state) EXPECT_EQ(s.values[state], brute_vc_state(bg, state));
    }
}

TEST(FiiProperty, FvsSignatureMatchesHubConstruction) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 150; ++trial) {
        const int t = trial % 4;
        const auto bg = random_boundaried(rng, t, t + trial % 6);
        const Signature s = signature_fvs(bg);
        const auto states = fvs_states(t);
        ASSERT_EQ(s.values.size(), states.size());
        for (std::size_t i = 0; i < states.size(); ++i) EXPECT_EQ(s.values[i], brute_fvs_state(bg, states[i])) << trial;
    }
}

TEST(Fii, EquivalenceAndNormalization) {
    const Signature a{ProblemId::VC, 1, {2, 3}};
    const Signature b{ProblemId::VC, 1, {0, 1}};
    const Signature c{ProblemId::VC, 1, {0, 0}};
    EXPECT_EQ(equivalent(a, b), 2);
    EXPECT_FALSE(equivalent(a, c).has_value());
    EXPECT_FALSE(equivalent(Signature{ProblemId::VC, 1, {kInfinity, 1}}, b).has_value());
    EXPECT_THROW(equivalent(a, Signature{ProblemId::FVS, 1, {0, 1}}), InputError);
    const auto n = normalize(Signature{ProblemId::VC, 2, {kInfinity, 4, 5, 6}});
    EXPECT_EQ(n.normalizer, 4);
    EXPECT_EQ(key_to_string(n.key), "inf,0,1,2");
    EXPECT_EQ(key_from_string("inf,0,1,2"), n.key);
    EXPECT_THROW(truncate_signature(Signature{ProblemId::FVS, 1, {0, 0}}), CapabilityError);
}

TEST(Fii, VcTruncationCapsAtSupersets) {
    // Star with the boundary at the centre: out costs 2, in costs 1.
    const Signature s{ProblemId::VC, 1, {2, 1}};
    EXPECT_EQ(truncate_signature(s).values, (std::vector<int>{2, 1}));
    // Isolated leaves on the boundary side cannot lower the cap below value(S') + 1.
    const Signature big{ProblemId::VC, 1, {5, 1}};
    EXPECT_EQ(truncate_signature(big).values, (std::vector<int>{2, 1}));
}

TEST(Fii, VcTableAtBoundaryOneHasThreeClasses) {
    const FiiTable table = build_table(ProblemSpec::vc(), 1, 3);
    EXPECT_EQ(table.classes.size(), 3u);
    EXPECT_EQ(table.varpi, 3);
    // The third class first appears with three vertices, so n_max = 3 is
    // not yet saturated; larger caps add no class.
    EXPECT_FALSE(table.saturated());
    const FiiTable deeper = build_table(ProblemSpec::vc(), 1, 5);
    EXPECT_EQ(deeper.classes.size(), 3u);
    EXPECT_EQ(deeper.varpi, 3);
    EXPECT_TRUE(deeper.saturated());
}

TEST(Fii, TablesAtBoundaryZeroHoldOnlyTheEmptyGraph) {
    for (ProblemId p : {ProblemId::FVS, ProblemId::VC}) {
        const FiiTable table = build_table(ProblemSpec::of(p), 0, 5);
        ASSERT_EQ(table.classes.size(), 1u);
        EXPECT_EQ(table.classes[0].representative.n(), 0);
    }
}

// Gluing soundness: each member m of a class satisfies
// opt(m + Z) = opt(rep + Z) + offset for every completion Z.
TEST(FiiProperty, LookupOffsetsAreSoundUnderGluing) {
    for (ProblemId p : {ProblemId::FVS, ProblemId::VC}) {
        for (int t = 1; t <= 2; ++t) {
            const FiiTable& table = fixtures::tables(p).by_boundary.at(t);
            const auto members = enumerate_boundaried(t, 5);
            const auto completions = enumerate_boundaried(t, t + 3, ConnectivityRule::Any);
            std::vector<Vertex> labels;
            for (int i = 0; i < t; ++i) labels.push_back(i);
            for (std::size_t mi = 0; mi < members.size(); mi += 3) {
                const auto& m = members[mi];
                const auto hit = lookup_representative(table, m);
                ASSERT_TRUE(hit.has_value());
                const auto& rep = hit->cls->representative;
                for (std::size_t zi = 0; zi < completions.size(); zi += 5) {
                    const auto& z = completions[zi];
                    const int lhs = brute_opt(p, oracle::glue(m.graph, m.labels, z.graph, labels));
                    const int rhs = brute_opt(p, oracle::glue(rep.graph, rep.labels, z.graph, labels));
                    ASSERT_EQ(lhs, rhs + hit->offset) << to_string(p) << " t=" << t << " member " << mi;
                }
            }
        }
    }
}

TEST(Fii, TableTextRoundTrip) {
    const FiiTable& table = fixtures::tables(ProblemId::FVS).by_boundary.at(2);
    std::stringstream first;
    write_table(first, table);
    std::stringstream in(first.str());
    const FiiTable back = read_table(in);
    std::stringstream second;
    write_table(second, back);
    EXPECT_EQ(first.str(), second.str());
    EXPECT_EQ(back.varpi, table.varpi);
    EXPECT_EQ(back.classes.size(), table.classes.size());
}

TEST(Fii, ReaderRejectsOtherVersionsAndGarbage) {
    std::stringstream out;
    write_table(out, build_table(ProblemSpec::vc(), 1, 3));
    std::string text = out.str();
    const auto pos = text.find("tmk-fii-table 1");
    ASSERT_EQ(pos, 0u);
    std::string other = text;
    other.replace(0, 15, "tmk-fii-table 9");
    std::stringstream bad(other);
    EXPECT_THROW(read_table(bad), ParseError);
    std::stringstream junk("hello\n");
    EXPECT_THROW(read_table(junk), ParseError);
    std::stringstream truncated(text.substr(0, text.size() / 2));
    EXPECT_THROW(read_table(truncated), ParseError);
}

TEST(Fii, CacheHitReturnsIdenticalFile) {
    const auto dir = std::filesystem::temp_directory_path() / "tmk-fii-cache-test";
    std::filesystem::remove_all(dir);
    const auto first = load_or_build_table(dir, ProblemSpec::vc(), 2, 4);
    EXPECT_FALSE(first.cache_hit);
    std::ifstream a(first.path);
    const std::string bytes((std::istreambuf_iterator<char>(a)), {});
    const auto second = load_or_build_table(dir, ProblemSpec::vc(), 2, 4);
    EXPECT_TRUE(second.cache_hit);
    EXPECT_EQ(second.path, first.path);
    std::ifstream b(second.path);
    EXPECT_EQ(std::string((std::istreambuf_iterator<char>(b)), {}), bytes);
    EXPECT_EQ(first.path.filename(), "fii-vc-t2-n4-v1.tbl");
    EXPECT_FALSE(load_table(dir, ProblemId::FVS, 2, 4).has_value());
    std::filesystem::remove_all(dir);
}
