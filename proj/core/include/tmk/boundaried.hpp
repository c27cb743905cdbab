#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tmk/graph.hpp"

namespace tmk {

/// A graph with t distinguished vertices. labels[i] is the vertex carrying
/// label i + 1.
struct BoundariedGraph {
    Graph graph;
    std::vector<Vertex> labels;

    BoundariedGraph() = default;
    /// Throws InputError unless labels are distinct valid vertices.
    BoundariedGraph(Graph g, std::vector<Vertex> labels);

    int t() const { return static_cast<int>(labels.size()); }
    int n() const { return graph.n(); }
    bool is_boundary(Vertex v) const;
    /// Non-boundary vertices, ascending.
    VertexSet interior() const;
};

/// The t-boundaried graph on t isolated labelled vertices.
BoundariedGraph boundary_only(int t);

struct GlueResult {
    Graph graph;
    std::vector<Vertex> map_first;   ///< vertex of the first operand -> glued id
    std::vector<Vertex> map_second;  ///< vertex of the second operand -> glued id
    VertexSet boundary;              ///< glued ids of the identified vertices
};

/// Disjoint union with equal labels identified; parallel edges merge. The
/// first operand keeps its ids, the second operand's interior is appended.
GlueResult glue(const BoundariedGraph& a, const BoundariedGraph& b);

/// G[W] as a boundaried graph with ∂(W) labelled by `labeling`
/// (labeling[i] gets label i + 1). Returns the graph with local ids.
BoundariedGraph boundaried_subgraph(const Graph& g, const VertexSet& w, const std::vector<Vertex>& labeling);

struct Replacement {
    Graph graph;
    std::vector<Vertex> old_to_new;  ///< -1 for removed vertices of W'
};

/// G[V \ W'] glued with `rep` along ∂(W) (W' = W \ ∂(W)), where
/// labeling[i] is the vertex of ∂(W) receiving label i + 1.
Replacement replace_protrusion(const Graph& g, const VertexSet& w, const BoundariedGraph& rep,
                               const std::vector<Vertex>& labeling);

/// Canonical code under isomorphisms that fix every boundary label.
/// Serialisable as text: "<n>:<t>:<hex adjacency bits>".
struct CanonicalCode {
    std::string text;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

inline constexpr int kCanonicalInteriorCap = 9;

/// Minimum upper-triangle adjacency code over all orderings that place the
/// boundary first (in label order) and permute the interior freely.
/// Throws CapabilityError when the interior exceeds kCanonicalInteriorCap.
CanonicalCode canonical_form(const BoundariedGraph& bg);

/// Which non-boundary components the enumeration admits.
enum class ConnectivityRule {
    BoundaryTouching,  ///< every interior vertex reaches the boundary
    Any,
};

struct EnumerationCaps {
    int max_t = 2;
    int max_n = 6;
};

/// Every t-boundaried graph with at most n_max vertices, exactly once up to
/// label-preserving isomorphism, ordered by (n, m, canonical code).
/// Vertices 0..t-1 carry labels 1..t.
std::vector<BoundariedGraph> enumerate_boundaried(int t, int n_max, ConnectivityRule rule = ConnectivityRule::BoundaryTouching,
                                                  EnumerationCaps caps = {});

/// True iff every interior vertex lies in a component meeting the boundary.
bool boundary_touching(const BoundariedGraph& bg);

/// Text form used in table files: "n <n> labels a b .. edges u-v ..".
std::string encode_boundaried(const BoundariedGraph& bg);
BoundariedGraph decode_boundaried(const std::string& text);

}  // namespace tmk
