#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace tmk {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids of some host graph.
using VertexSet = std::vector<Vertex>;

struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Graphs are immutable values: every editing operation in this library
/// returns a fresh graph together with an explicit id mapping.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Builds the graph, merging parallel edges. Self-loops and ids outside
    /// [0, n) raise InputError.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int n() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t m() const noexcept { return m_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    /// All edges with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

/// A graph derived from a host graph plus the id correspondence.
/// old_to_new[v] is -1 for vertices that no longer exist.
struct Relabeled {
    Graph graph;
    std::vector<Vertex> old_to_new;
    std::vector<Vertex> new_to_old;
};

// Set helpers. Arguments must already be sorted and unique.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, Vertex v);
VertexSet all_vertices(const Graph& g);

/// Sorts and dedupes `w`; throws InputError if any id is outside [0, g.n()).
VertexSet make_vertex_set(const Graph& g, std::vector<Vertex> w);

/// Vertices of W with a neighbour outside W.
VertexSet boundary(const Graph& g, const VertexSet& w);

/// Vertices outside W with a neighbour in W.
VertexSet neighborhood(const Graph& g, const VertexSet& w);

/// Number of X-vertices that have at least one neighbour in Y (D_X(Y)).
/// X and Y must be disjoint.
int degree_wrt(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Contracts uv into one vertex. The merged vertex receives the new id of
/// min(u, v); both endpoints map to it in old_to_new.
Relabeled contract_edge(const Graph& g, Edge e);

/// Induced subgraph; new ids follow the order of `s`.
Relabeled induced(const Graph& g, const VertexSet& s);

/// Connected components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Components of G[s], expressed in host ids.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s);

bool is_connected_within(const Graph& g, const VertexSet& s);

/// True iff the graph has no cycle.
bool is_forest(const Graph& g);

}  // namespace tmk
