#include "fixtures.hpp"

#include "tmk/sparsity.hpp"

namespace fixtures {

using namespace tmk;

namespace {

AuditParams tiny_params() {
    AuditParams p;
    p.r = 3;
    p.t = 1;
    p.varpi = VarpiLookup::constant(1);
    p.constants.beta = Rational(1, 100);
    return p;
}

Graph star_host(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph(leaves + 1, edges);
}

MarkingState marking_on_star(int leaves) {
    MarkingState ms;
    ms.forest = bag_star(leaves);
    ms.marked.assign(static_cast<std::size_t>(ms.forest.node_count()), 0);
    ms.marked_step.assign(ms.marked.size(), 0);
    return ms;
}

StrippedTree tree_of(VertexSet vertices, std::vector<Node> marked_neighbors = {}) {
    StrippedTree t;
    t.nodes = {0};
    t.bags = {vertices};
    t.vertices = std::move(vertices);
    t.marked_neighbors = std::move(marked_neighbors);
    return t;
}

}  // namespace

ForestDecomposition bag_star(int leaves) {
    TreeDecomposition td;
    td.bags.push_back({0});
    for (int i = 1; i <= leaves; ++i) {
        td.bags.push_back({0, i});
        td.edges.emplace_back(0, i);
    }
    td.root = 0;
    VertexSet comp;
    for (int i = 0; i <= leaves; ++i) comp.push_back(i);
    return assemble_forest({td}, {comp});
}

std::vector<NegativeFixture> negative_fixtures() {
    std::vector<NegativeFixture> out;

    out.push_back({"lemma3", "K_{3,200}: 200 disjoint vertices each seeing all of |X| = 3 at r = 3", [] {
                       std::vector<Edge> edges;
                       std::vector<VertexSet> parts;
                       for (int v = 3; v < 203; ++v) {
                           for (int x = 0; x < 3; ++x) edges.push_back({x, v});
                           parts.push_back({v});
                       }
                       const Graph g(203, edges);
                       return check_lemma3(g, {0, 1, 2}, parts, 3, SparsityConstants{});
                   }});

    out.push_back({"lemma4", "unreduced path with an empty modulator", [] {
                       const Graph g = path_graph(5);
                       AuditParams p = tiny_params();
                       return check_lemma4(g, {}, classify_components(g, {}, p.r), p);
                   }});

    out.push_back({"lemma2", "three marked leaves without LCA closure", [] {
                       MarkingState ms = marking_on_star(3);
                       for (Node b = 1; b <= 3; ++b) ms.marked[static_cast<std::size_t>(b)] = 1;
                       return check_marking_bounds(ms, star_host(3), {0}, tiny_params())[0];
                   }});

    out.push_back({"lemma6.marked_bags", "two marked bags against a bound below one", [] {
                       MarkingState ms = marking_on_star(2);
                       ms.marked[1] = ms.marked[2] = 1;
                       return check_marking_bounds(ms, star_host(2), {0}, tiny_params())[1];
                   }});

    out.push_back({"lemma6.marked_vertices", "marked vertices against a bound below one", [] {
                       MarkingState ms = marking_on_star(2);
                       ms.marked[1] = 1;
                       ms.marked_vertices = {0, 1};
                       return check_marking_bounds(ms, star_host(2), {0}, tiny_params())[2];
                   }});

    out.push_back({"lemma7", "one scrub of two vertices against a bound below one", [] {
                       MarkingState ms = marking_on_star(2);
                       ms.scrubs.push_back(Scrub{1, {1}, {{2}}});
                       return check_marking_bounds(ms, star_host(2), {0}, tiny_params())[3];
                   }});

    out.push_back({"scrubs.disjoint", "two scrubs sharing vertex 1", [] {
                       MarkingState ms = marking_on_star(2);
                       ms.scrubs.push_back(Scrub{1, {1}, {}});
                       ms.scrubs.push_back(Scrub{2, {1, 2}, {}});
                       return check_marking_bounds(ms, star_host(2), {0}, tiny_params())[4];
                   }});

    out.push_back({"lemma9", "small tree outside every scrub with an empty modulator", [] {
                       TreeClassification trees;
                       trees.small.push_back(tree_of({1, 2, 3}));
                       return check_lemma9(trees, {}, {}, tiny_params());
                   }});

    out.push_back({"lemma8", "marked bag with a twelve-vertex small tree hanging off it", [] {
                       MarkingState ms = marking_on_star(1);
                       ms.marked[0] = 1;
                       TreeClassification trees;
                       VertexSet big;
                       for (int v = 1; v <= 12; ++v) big.push_back(v);
                       trees.small.push_back(tree_of(big, {0}));
                       return check_lemma8(ms, trees, tiny_params());
                   }});

    out.push_back({"lemma10", "path decomposition with a 20-vertex bag", [] {
                       VertexSet bag;
                       for (int v = 0; v < 20; ++v) bag.push_back(v);
                       return check_lemma10({{0, 1}, bag}, tiny_params());
                   }});

    out.push_back({"lemma11", "100-vertex segment", [] {
                       const AuditParams p = tiny_params();
                       Segment s;
                       for (int v = 0; v < 100; ++v) s.vertices.push_back(v);
                       return check_lemma11({s}, cutting_up_params(1, p).f_hat);
                   }});

    out.push_back({"lemma12", "large tree with an empty modulator", [] {
                       const AuditParams p = tiny_params();
                       TreeClassification trees;
                       trees.large.push_back(tree_of({1, 2, 3, 4}));
                       return check_lemma12(trees, {}, cutting_up_params(1, p).f_hat, p);
                   }});

    out.push_back({"observation1", "bag {0} whose child subtrees hold isolated vertices", [] {
                       return check_observation1(Graph(3), bag_star(2));
                   }});

    return out;
}

}  // namespace fixtures
