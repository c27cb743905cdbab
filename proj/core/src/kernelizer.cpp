#include "tmk/kernelizer.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <tuple>

#include <json.hpp>

#include "tmk/boundaried.hpp"
#include "tmk/errors.hpp"
#include "tmk/sparsity.hpp"

namespace tmk {

int ReductionTrace::total_offset() const {
    int sum = 0;
    for (const TraceStep& s : steps) sum += s.offset;
    return sum;
}

void write_trace_jsonl(std::ostream& os, const ReductionTrace& trace) {
    for (const TraceStep& s : trace.steps) {
        nlohmann::ordered_json j;
        j["step"] = s.index;
        j["w"] = s.w_size;
        j["boundary"] = s.boundary_size;
        j["strategy"] = s.strategy;
        j["class_key"] = s.class_key;
        j["offset"] = s.offset;
        j["n_before"] = s.n_before;
        j["n_after"] = s.n_after;
        j["k_before"] = s.k_before;
        j["k_after"] = s.k_after;
        j["trivial_no"] = s.trivial_no;
        os << j.dump() << '\n';
    }
}

const FiiTable* TableSet::find(int boundary_size) const {
    auto it = by_boundary.find(boundary_size);
    return it == by_boundary.end() ? nullptr : &it->second;
}

int TableSet::max_boundary() const {
    return by_boundary.empty() ? -1 : by_boundary.rbegin()->first;
}

VertexSet find_modulator(const Instance& inst, int exact_cap) {
    const Graph& g = inst.graph;
    if (g.n() <= exact_cap) return exact_solve(inst.problem.id, g, exact_cap).witness;
    return inst.problem.id == ProblemId::FVS ? approx_feedback_vertex_set(g) : approx_vertex_cover(g);
}

namespace {

// Certificate in local ids of G[w] from forest nodes, with `extra` host
// vertices added to every bag.
TreeDecomposition certificate_from_nodes(const ForestDecomposition& fd, const std::vector<Node>& nodes,
                                         const VertexSet& w, const VertexSet& extra) {
    std::map<Node, Node> local;
    for (Node b : nodes) local.emplace(b, static_cast<Node>(local.size()));
    const auto id = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(w.begin(), w.end(), v) - w.begin());
    };
    TreeDecomposition td;
    for (Node b : nodes) {
        VertexSet bag;
        for (Vertex v : set_union(fd.bags[static_cast<std::size_t>(b)], extra)) bag.push_back(id(v));
        td.bags.push_back(std::move(bag));
    }
    for (Node b : nodes) {
        const Node p = fd.parent[static_cast<std::size_t>(b)];
        auto it = local.find(p);
        if (p >= 0 && it != local.end()) td.edges.emplace_back(it->second, local[b]);
    }
    td.root = Node{0};
    return td;
}

}  // namespace

bool certificate_valid(const Graph& g, const Protrusion& p, int width_budget) {
    const Graph sub = induced(g, p.w).graph;
    return p.certificate.width() <= width_budget && validate(sub, p.certificate).ok;
}

std::vector<Protrusion> find_protrusions(const Graph& g, const VertexSet& x, int b, int width_budget, int t) {
    const ForestDecomposition fd = rooted_forest_decomposition(g, x, t);
    std::map<VertexSet, Protrusion> found;
    const auto offer = [&](VertexSet w, const std::vector<Node>& nodes, const VertexSet& extra, const char* strategy) {
        if (w.empty() || found.count(w)) return;
        VertexSet bd = boundary(g, w);
        if (static_cast<int>(bd.size()) > b) return;
        TreeDecomposition cert = certificate_from_nodes(fd, nodes, w, extra);
        if (cert.width() > width_budget) return;
        Protrusion p{w, std::move(bd), std::move(cert), strategy};
        found.emplace(std::move(w), std::move(p));
    };
    for (Node node = 0; node < fd.node_count(); ++node) {
        const std::vector<Node> nodes = fd.subtree(node);
        VertexSet w;
        for (Node s : nodes) w = set_union(w, fd.bags[static_cast<std::size_t>(s)]);
        const bool whole = fd.parent[static_cast<std::size_t>(node)] < 0;
        offer(w, nodes, {}, whole ? "component" : "subtree");
        const VertexSet attach = set_intersection(neighborhood(g, w), x);
        if (!attach.empty() && static_cast<int>(attach.size()) <= b) {
            offer(set_union(w, attach), nodes, attach, whole ? "component+x" : "subtree+x");
        }
    }
    std::vector<Protrusion> out;
    out.reserve(found.size());
    for (auto& [w, p] : found) out.push_back(std::move(p));
    std::stable_sort(out.begin(), out.end(), [](const Protrusion& a, const Protrusion& c) {
        return std::make_tuple(-a.restricted_size(), a.boundary.size(), std::cref(a.w)) <
               std::make_tuple(-c.restricted_size(), c.boundary.size(), std::cref(c.w));
    });
    return out;
}

std::optional<AppliedReduction> apply_reduction(const Instance& inst, const Protrusion& p, const FiiTable& table) {
    if (static_cast<int>(p.boundary.size()) != table.t) {
        throw InputError("apply_reduction: protrusion boundary has " + std::to_string(p.boundary.size()) +
                         " vertices but the table is for t=" + std::to_string(table.t));
    }
    if (table.problem != inst.problem.id) throw InputError("apply_reduction: table belongs to another problem");
    const BoundariedGraph bg = boundaried_subgraph(inst.graph, p.w, p.boundary);
    const auto hit = lookup_representative(table, bg);
    if (!hit) return std::nullopt;
    const BoundariedGraph& rep = hit->cls->representative;
    if (p.restricted_size() <= rep.n() - rep.t()) return std::nullopt;

    Replacement r = replace_protrusion(inst.graph, p.w, rep, p.boundary);
    AppliedReduction out;
    out.step.w_size = static_cast<int>(p.w.size());
    out.step.boundary_size = static_cast<int>(p.boundary.size());
    out.step.strategy = p.strategy;
    out.step.class_key = key_to_string(hit->cls->key);
    out.step.offset = hit->offset;
    out.step.n_before = inst.graph.n();
    out.step.n_after = r.graph.n();
    out.step.k_before = inst.k;
    out.step.k_after = inst.k - hit->offset;
    out.instance = Instance{std::move(r.graph), out.step.k_after, inst.problem};
    out.old_to_new = std::move(r.old_to_new);
    return out;
}

Instance trivial_no_instance(const ProblemSpec& p) {
    // Optimum 1 with k = 0: a triangle for FVS, a single edge for VC.
    if (p.id == ProblemId::FVS) return Instance{cycle_graph(3), 0, p};
    return Instance{Graph(2, {{0, 1}}), 0, p};
}

KernelResult kernelize(const Instance& inst, const TableSet& tables, const KernelConfig& config) {
    const int t = inst.problem.t;
    const int width_budget = config.width_budget < 0 ? t + config.b_max : config.width_budget;
    const int b = std::min(config.b_max, tables.max_boundary());
    KernelResult out{inst, {}};
    if (inst.k < 0) {
        TraceStep s;
        s.trivial_no = true;
        s.strategy = "trivial-no";
        s.n_before = inst.graph.n();
        s.k_before = inst.k;
        s.offset = inst.k;
        out.kernel = trivial_no_instance(inst.problem);
        s.n_after = out.kernel.graph.n();
        out.trace.steps.push_back(s);
        return out;
    }
    for (int round = 0; round < config.step_limit; ++round) {
        Instance& cur = out.kernel;
        const VertexSet x = find_modulator(cur, config.exact_cap);
        std::optional<AppliedReduction> applied;
        if (b >= 0) {
            for (const Protrusion& p : find_protrusions(cur.graph, x, b, width_budget, t)) {
                const FiiTable* table = tables.find(static_cast<int>(p.boundary.size()));
                if (!table) continue;
                applied = apply_reduction(cur, p, *table);
                if (applied) break;
            }
        }
        if (!applied) break;
        applied->step.index = static_cast<int>(out.trace.steps.size());
        out.trace.steps.push_back(applied->step);
        cur = std::move(applied->instance);
        if (cur.k < 0) {
            TraceStep s;
            s.index = static_cast<int>(out.trace.steps.size());
            s.trivial_no = true;
            s.strategy = "trivial-no";
            s.n_before = cur.graph.n();
            s.k_before = cur.k;
            s.offset = cur.k;
            cur = trivial_no_instance(inst.problem);
            s.n_after = cur.graph.n();
            out.trace.steps.push_back(s);
            break;
        }
    }
    return out;
}

}  // namespace tmk
