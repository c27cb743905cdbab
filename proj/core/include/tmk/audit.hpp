#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tmk/decomposition.hpp"
#include "tmk/graph.hpp"
#include "tmk/kernelizer.hpp"
#include "tmk/sparsity.hpp"

namespace tmk {

/// ϖ̂ by boundary slot. Slots above the largest built table fall back to
/// that table and are reported as budget-limited.
struct VarpiLookup {
    std::map<int, int> by_slot;

    struct Value {
        int value = 0;
        int slot_used = -1;
        bool budget_limited = false;
    };
    Value at(int slot) const;

    static VarpiLookup from_tables(const TableSet& tables);
    static VarpiLookup constant(int value);
};

struct AuditParams {
    int r = 6;
    int t = 1;
    VarpiLookup varpi;
    SparsityConstants constants;
    bool enable_lemma8 = false;
};

struct CheckRecord {
    std::string id;
    double measured = 0;
    double bound = 0;
    bool holds = true;
    std::optional<double> literal_bound;  ///< bound with bag size t instead of t + 1
    bool budget_limited = false;
    std::string notes;
};

struct AuditReport {
    std::vector<CheckRecord> rows;
    /// Step 2 visit order (forest node ids).
    std::vector<Node> visit_order;

    bool all_hold() const;
    const CheckRecord* find(const std::string& id) const;
};

/// Columns: check_id,measured,bound,holds,notes
void write_report_csv(std::ostream& os, const AuditReport& report);
void write_report_json(std::ostream& os, const AuditReport& report);

struct ComponentClassification {
    std::vector<VertexSet> small;  ///< D_X(C) < r
    std::vector<VertexSet> large;  ///< D_X(C) >= r
};

ComponentClassification classify_components(const Graph& g, const VertexSet& x, int r);

/// Count of pairwise disjoint connected subgraphs of G - X with D_X >= r
/// against 1/2 * beta * r^2 * |X|. Throws InputError naming the first
/// subgraph that breaks the precondition.
CheckRecord check_lemma3(const Graph& g, const VertexSet& x, const std::vector<VertexSet>& subgraphs, int r,
                         const SparsityConstants& c, const std::string& id = "lemma3");

/// Total size of the small components against
/// ϖ̂(r) * (2^(tau r log r) + beta r^2) * |X|.
CheckRecord check_lemma4(const Graph& g, const VertexSet& x, const ComponentClassification& cls,
                         const AuditParams& params);

struct Scrub {
    Node bag = -1;
    VertexSet root;
    std::vector<VertexSet> twigs;

    VertexSet vertices() const;
    int size() const { return static_cast<int>(vertices().size()); }
};

struct MarkingState {
    ForestDecomposition forest;
    std::vector<char> marked;       ///< per forest node
    std::vector<int> marked_step;   ///< 2, 3 or 4; 0 when unmarked
    VertexSet marked_vertices;
    std::vector<Scrub> scrubs;
    std::vector<Node> visit_order;

    std::vector<Node> marked_nodes() const;
    VertexSet scrub_vertices() const;
};

/// Forest decomposition of the large components only.
ForestDecomposition large_component_forest(const Graph& g, const VertexSet& x, const ComponentClassification& cls,
                                           int t);

/// The four-step marking procedure. Step 2 visits bags in BFS order per
/// tree; a scrub's root and twigs avoid vertices of earlier scrubs. Step 3
/// runs bottom-up; Step 4 closes the marks under least common ancestors.
MarkingState run_marking(const Graph& g, const VertexSet& x, const ForestDecomposition& fd, const AuditParams& params);

/// Maximal runs of unmarked nodes, each with its marked neighbours.
struct UnmarkedSubtree {
    std::vector<Node> nodes;
    std::vector<Node> marked_neighbors;
};

std::vector<UnmarkedSubtree> unmarked_subtrees(const ForestDecomposition& fd, const std::vector<char>& marked);

/// Lemma 2, Lemma 6 (bags and vertices), Lemma 7 and the scrub disjointness
/// assertion.
std::vector<CheckRecord> check_marking_bounds(const MarkingState& ms, const Graph& g, const VertexSet& x,
                                              const AuditParams& params);

/// A tree of the stripped forest: a maximal unmarked subtree whose bags
/// lose every marked vertex.
struct StrippedTree {
    std::vector<Node> nodes;
    std::vector<VertexSet> bags;  ///< parallel to nodes
    std::vector<Node> marked_neighbors;
    VertexSet vertices;
    int dx = 0;
};

struct TreeClassification {
    std::vector<StrippedTree> small;
    std::vector<StrippedTree> large;
    int dropped = 0;  ///< trees holding scrub vertices only
};

TreeClassification classify_trees(const MarkingState& ms, const Graph& g, const VertexSet& x, int r);

/// Lemma 9: vertices of small trees outside the scrubs against
/// 4 beta r^2 ϖ̂(2t+r) |X|.
CheckRecord check_lemma9(const TreeClassification& trees, const VertexSet& scrub_vertices, const VertexSet& x,
                         const AuditParams& params);

/// Lemma 8: per marked bag, vertices of adjacent small subtrees outside
/// the scrubs against ϖ̂(t+r). Reports the maximum.
CheckRecord check_lemma8(const MarkingState& ms, const TreeClassification& trees, const AuditParams& params);

struct CentralPath {
    std::vector<Node> nodes;  ///< forest node ids, in path order
    bool rooted_fallback = false;  ///< no marked neighbour: starts at the tree's top node
};

/// Two marked neighbours: the connecting path inside the tree. One: from
/// the node next to it to the leaf maximising D_X of the path's vertices.
CentralPath central_path(const StrippedTree& tree, const ForestDecomposition& fd, const Graph& g,
                         const VertexSet& x);

/// Path bags; every path bag absorbs the subtrees hanging off it. Bags hold
/// host ids.
std::vector<VertexSet> path_decomposition_from_central(const StrippedTree& tree, const ForestDecomposition& fd,
                                                       const CentralPath& path);

/// Validates a path decomposition of G[vertices] (host ids).
ValidationResult validate_path(const Graph& g, const VertexSet& vertices, const std::vector<VertexSet>& bags);

/// Lemma 10: width of the path decomposition against (t+1)(ϖ̂(t+r)+1) - 1.
CheckRecord check_lemma10(const std::vector<VertexSet>& pd, const AuditParams& params, const std::string& id = "lemma10");

struct CuttingUpParams {
    double threshold = 0;  ///< (p + 2(t+1)ϖ̂₁) ϖ̂₂
    double f_hat = 0;
};

CuttingUpParams cutting_up_params(int pd_width, const AuditParams& params);

struct Segment {
    VertexSet vertices;  ///< G(A, Z), or the whole remainder for the last one
    bool tail = false;
    int dx = 0;
    bool has_large_component = false;
};

/// Walks the path decomposition from its first bag, emitting G(A, Z) at the
/// first Z reaching the threshold and restarting from Z.
std::vector<Segment> cutting_up(const std::vector<VertexSet>& pd, const Graph& g, const VertexSet& x,
                                const AuditParams& params);

/// Lemma 11: every segment has at most f̂ vertices.
CheckRecord check_lemma11(const std::vector<Segment>& segments, double f_hat, const std::string& id = "lemma11");

/// Lemma 12: vertices in large trees against (beta r^2 |X| / 2)(f̂ + ϖ̂₂).
CheckRecord check_lemma12(const TreeClassification& trees, const VertexSet& x, double f_hat, const AuditParams& params);

/// Observation 1 on every bag and its child subtrees (all together and one
/// at a time): components of G[B ∪ V_1 ∪ ... ∪ V_p] never exceed |B|.
CheckRecord check_observation1(const Graph& g, const ForestDecomposition& fd);

/// Full pipeline on (g, x). Includes the sparsity rows and main.total.
AuditReport audit_report(const Graph& g, const VertexSet& x, const AuditParams& params);

struct InstanceAudit {
    KernelResult kernel;
    VertexSet modulator;
    AuditReport report;
};

/// Kernelizes, recomputes a modulator on the kernel and audits it.
InstanceAudit audit_instance(const Instance& inst, const TableSet& tables, const AuditParams& params,
                             const KernelConfig& config = {});

}  // namespace tmk
