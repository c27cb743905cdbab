#pragma once

// Brute-force reference implementations. They share only the Graph type
// with the library so that agreement is evidence, not tautology.

#include <cstdint>
#include <random>
#include <vector>

#include "tmk/graph.hpp"

namespace oracle {

using tmk::Graph;
using tmk::Vertex;

/// G(n, p) with a caller-owned engine.
Graph random_graph(std::mt19937_64& rng, int n, double p);

/// Acyclicity by union-find over the edges not touching `removed`.
bool acyclic_without(const Graph& g, std::uint32_t removed);

/// Subset enumeration by increasing size; n <= 20.
int min_fvs(const Graph& g);
int min_vc(const Graph& g);

/// Minimum over all elimination orderings; n <= 8.
int treewidth(const Graph& g);

/// Full enumeration: every injective placement of the branch vertices and
/// every assignment of the remaining vertices to edges of h (or to none);
/// an edge is realised when its endpoints are connected through its own
/// vertices only. n(g) <= 10.
bool topological_minor(const Graph& g, const Graph& h);

/// Graph on the vertices of a and b where a's vertex a_labels[i] and b's
/// vertex b_labels[i] become one vertex. Ids: a keeps its ids, then b's
/// unlabelled vertices in order.
Graph glue(const Graph& a, const std::vector<Vertex>& a_labels, const Graph& b, const std::vector<Vertex>& b_labels);

/// Labelled graph on n vertices whose vertices 0..t-1 carry labels 1..t.
struct Labelled {
    Graph graph;
    int t = 0;
};

/// Every graph on n vertices (0..t-1 labelled) in which each unlabelled
/// vertex reaches a labelled one, one per label-preserving isomorphism
/// class, for n in [t, n_max]. Dedupes by minimum adjacency code over all
/// permutations of the unlabelled vertices.
std::vector<Labelled> boundaried_classes(int t, int n_max);

}  // namespace oracle
