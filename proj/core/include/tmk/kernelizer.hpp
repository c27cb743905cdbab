#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tmk/decomposition.hpp"
#include "tmk/fii.hpp"
#include "tmk/graph.hpp"
#include "tmk/problem.hpp"
#include "tmk/solvers.hpp"

namespace tmk {

struct Instance {
    Graph graph;
    int k = 0;
    ProblemSpec problem;
};

/// A vertex set W with small boundary and a width certificate for G[W].
/// The certificate uses local ids: vertex w[i] of the host is i.
struct Protrusion {
    VertexSet w;
    VertexSet boundary;
    TreeDecomposition certificate;
    std::string strategy;

    /// |W \ ∂(W)|
    int restricted_size() const { return static_cast<int>(w.size() - boundary.size()); }
};

struct TraceStep {
    int index = 0;
    int w_size = 0;
    int boundary_size = 0;
    std::string strategy;
    std::string class_key;
    int offset = 0;
    int n_before = 0;
    int n_after = 0;
    int k_before = 0;
    int k_after = 0;
    /// The instance was replaced by the canonical NO instance.
    bool trivial_no = false;
};

struct ReductionTrace {
    std::vector<TraceStep> steps;

    int total_offset() const;
};

/// One record per line: {"step", "w", "boundary", "strategy", "class_key",
/// "offset", "n_before", "n_after", "k_before", "k_after", "trivial_no"}.
void write_trace_jsonl(std::ostream& os, const ReductionTrace& trace);

/// Tables indexed by boundary size.
struct TableSet {
    std::map<int, FiiTable> by_boundary;

    const FiiTable* find(int boundary_size) const;
    int max_boundary() const;
};

struct KernelConfig {
    int b_max = 2;                   ///< largest boundary replaced
    int width_budget = -1;           ///< certificate width cap; < 0 means t + b_max
    int exact_cap = kDefaultExactSolveCap;  ///< modulator solved exactly up to this size
    int step_limit = 1 << 20;
};

/// Treewidth modulator: an (exact when n <= exact_cap, else approximate)
/// feedback vertex set for FVS or vertex cover for VC.
VertexSet find_modulator(const Instance& inst, int exact_cap = kDefaultExactSolveCap);

/// Candidates from whole components of G - X, rooted subtrees of its forest
/// decomposition, and either extended by their (at most b) X-neighbours.
/// Ordered by |W'| descending, then |∂W| ascending, then W.
std::vector<Protrusion> find_protrusions(const Graph& g, const VertexSet& x, int b, int width_budget, int t);

/// Re-validates a candidate's certificate against G[W].
bool certificate_valid(const Graph& g, const Protrusion& p, int width_budget);

struct AppliedReduction {
    Instance instance;
    TraceStep step;
    std::vector<Vertex> old_to_new;
};

/// Replaces p by its class representative when the class is known and the
/// graph strictly shrinks; nullopt otherwise. Throws InputError when the
/// table's boundary size differs from |∂W|.
std::optional<AppliedReduction> apply_reduction(const Instance& inst, const Protrusion& p, const FiiTable& table);

/// The fixed NO instance used once k drops below zero: a triangle with k = 0.
Instance trivial_no_instance(const ProblemSpec& p);

struct KernelResult {
    Instance kernel;
    ReductionTrace trace;
};

/// Applies the reduction rule until no candidate shrinks the graph.
KernelResult kernelize(const Instance& inst, const TableSet& tables, const KernelConfig& config = {});

}  // namespace tmk
