#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tmk/graph.hpp"

namespace tmk {

using Node = int;

/// Tree of bags. `edges` join node indices; an empty decomposition (no
/// bags) is valid only for the empty graph.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<Node, Node>> edges;
    std::optional<Node> root;

    int width() const;
    std::vector<std::vector<Node>> adjacency() const;
};

enum class ViolationKind {
    NotATree,         ///< tree edges do not form a tree on the bag indices
    BadVertex,        ///< a bag holds an id outside the graph
    UncoveredVertex,  ///< condition 1
    UncoveredEdge,    ///< condition 2
    DisconnectedOccurrence,  ///< condition 3
};

struct Violation {
    ViolationKind kind;
    Vertex u = -1;
    Vertex v = -1;  ///< second endpoint for UncoveredEdge
    std::string describe() const;
};

struct ValidationResult {
    bool ok = true;
    std::vector<Violation> violations;
};

ValidationResult validate(const Graph& g, const TreeDecomposition& td);

inline constexpr int kDefaultExactTreewidthCap = 14;

struct ExactTreewidth {
    /// Optimal width, or nullopt when it exceeds the requested cap.
    std::optional<int> width;
    std::optional<TreeDecomposition> decomposition;
};

/// Exact treewidth by memoised search over elimination prefixes.
/// Throws CapabilityError when g.n() exceeds `size_cap`.
ExactTreewidth treewidth_exact(const Graph& g, int width_cap, int size_cap = kDefaultExactTreewidthCap);

/// Min-fill elimination ordering.
TreeDecomposition tree_decomposition_heuristic(const Graph& g);

/// Decomposition induced by an elimination ordering (a permutation of V),
/// with redundant bags merged into neighbours.
TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order);

/// Width of the elimination ordering (max number of later neighbours in
/// the fill-in graph).
int ordering_width(const Graph& g, const std::vector<Vertex>& order);

/// Merges every bag that is a subset of a neighbouring bag into it.
TreeDecomposition compact(TreeDecomposition td);

/// Rooted tree decompositions, one per component of G - X, stored as a
/// single forest with global node ids. Bags hold host-graph vertex ids.
struct ForestDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::vector<Node>> adj;
    std::vector<Node> parent;            ///< -1 at roots
    std::vector<int> tree_of;            ///< node -> tree index
    std::vector<Node> roots;             ///< per tree
    std::vector<VertexSet> components;   ///< per tree: vertices covered
    std::vector<std::vector<Node>> nodes_of_tree;

    int tree_count() const { return static_cast<int>(roots.size()); }
    int node_count() const { return static_cast<int>(bags.size()); }
    std::vector<Node> children(Node b) const;
    /// Nodes of the rooted subtree below `b`, including `b`, in BFS order.
    std::vector<Node> subtree(Node b) const;
    /// Nodes of tree `tree` in BFS order from its root.
    std::vector<Node> bfs_order(int tree) const;
    int max_bag_size() const;
};

/// Builds a ForestDecomposition from per-tree decompositions (bag ids in
/// host-graph terms). Each tree is rooted at a node of degree >= 2 when it
/// has at least three nodes, otherwise at node 0.
ForestDecomposition assemble_forest(const std::vector<TreeDecomposition>& trees,
                                    const std::vector<VertexSet>& components);

/// One rooted decomposition per component of G - X with bag size <= t + 1.
/// Throws PreconditionError naming the component when no decomposition of
/// width <= t is found.
ForestDecomposition rooted_forest_decomposition(const Graph& g, const VertexSet& x, int t);

/// G restricted to the union of the bags of `nodes`, which must form a
/// connected part of the forest (InputError otherwise).
Relabeled induced_by_subtree(const Graph& g, const ForestDecomposition& fd, const std::vector<Node>& nodes);

/// Best-effort decomposition: exact when the graph is small, else min-fill.
TreeDecomposition decompose(const Graph& g, int exact_cap = kDefaultExactTreewidthCap);

}  // namespace tmk
