#pragma once

#include <cstdint>

#include <boost/rational.hpp>

#include "tmk/graph.hpp"

namespace tmk {

using Rational = boost::rational<std::int64_t>;

/// Constants of the sparsity facts for graphs excluding a topological minor
/// on r vertices: average degree < beta * r^2, at most 2^(tau r log r) n
/// cliques.
struct SparsityConstants {
    Rational beta{10};
    Rational tau{451, 100};
    int r = 3;
    double log_base = 2.0;

    double beta_value() const { return boost::rational_cast<double>(beta); }
    double tau_value() const { return boost::rational_cast<double>(tau); }
    /// beta * r^2
    double degree_bound() const;
    /// 2^(tau * r * log_base(r))
    double clique_factor() const;
};

/// 2|E| / n. Throws InputError on the empty graph.
Rational average_degree(const Graph& g);

/// Number of non-empty vertex subsets inducing a complete graph.
std::uint64_t count_cliques(const Graph& g);

inline constexpr int kDefaultMinorCap = 6;

/// True iff `g` contains a subdivision of `h`. Exhaustive backtracking; `h`
/// may have at most `h_cap` vertices (CapabilityError otherwise).
bool contains_topological_minor(const Graph& g, const Graph& h, int h_cap = kDefaultMinorCap);

struct SparsityCheck {
    Rational average_degree{0};
    double degree_bound = 0.0;
    bool degree_holds = true;
    std::uint64_t cliques = 0;
    double clique_bound = 0.0;
    bool cliques_holds = true;

    bool holds() const { return degree_holds && cliques_holds; }
};

SparsityCheck check_sparsity_bounds(const Graph& g, const SparsityConstants& c);

// Named graphs used across tests, generators and fixtures.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph grid_graph(int rows, int cols);
Graph petersen_graph();

}  // namespace tmk
