#pragma once

#include <optional>
#include <vector>

#include "tmk/graph.hpp"
#include "tmk/problem.hpp"

namespace tmk {

/// Undirected multigraph with optional loops; only `deletable` vertices may
/// enter a solution.
struct Multigraph {
    int n = 0;
    std::vector<Edge> edges;  ///< u == v is a loop; repeats are parallel edges
    std::vector<char> deletable;
};

/// Minimum set of deletable vertices whose removal leaves a forest (loops
/// and parallel edges count as cycles), or nullopt if none exists.
/// Branch and bound with degree-<=2 reductions.
std::optional<VertexSet> min_feedback_vertex_set(const Multigraph& g);

/// Minimum vertex cover by branch and bound.
VertexSet min_vertex_cover(const Graph& g);

struct Solution {
    int value = 0;
    VertexSet witness;
};

inline constexpr int kDefaultExactSolveCap = 25;

/// Exact optimum with a certifying solution. Throws CapabilityError when
/// g.n() exceeds `cap`.
Solution exact_solve(ProblemId problem, const Graph& g, int cap = kDefaultExactSolveCap);

/// True iff `x` is a feasible solution of `problem` on g.
bool is_solution(ProblemId problem, const Graph& g, const VertexSet& x);

/// Local-ratio 2-approximation (unit weights) followed by redundancy removal.
VertexSet approx_feedback_vertex_set(const Graph& g);

/// Endpoints of a greedy maximal matching.
VertexSet approx_vertex_cover(const Graph& g);

}  // namespace tmk
