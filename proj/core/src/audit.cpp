#include "tmk/audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <queue>

#include <json.hpp>

#include "tmk/errors.hpp"

namespace tmk {

VarpiLookup::Value VarpiLookup::at(int slot) const {
    if (by_slot.empty()) return {0, -1, true};
    if (auto it = by_slot.find(slot); it != by_slot.end()) return {it->second, slot, false};
    auto above = by_slot.lower_bound(slot);
    if (above == by_slot.end()) return {by_slot.rbegin()->second, by_slot.rbegin()->first, true};
    return {above->second, above->first, true};
}

VarpiLookup VarpiLookup::from_tables(const TableSet& tables) {
    VarpiLookup out;
    for (const auto& [b, table] : tables.by_boundary) out.by_slot[b] = table.varpi;
    return out;
}

VarpiLookup VarpiLookup::constant(int value) {
    VarpiLookup out;
    for (int slot = 0; slot <= 64; ++slot) out.by_slot[slot] = value;
    return out;
}

bool AuditReport::all_hold() const {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRecord& r) { return r.holds; });
}

const CheckRecord* AuditReport::find(const std::string& id) const {
    for (const CheckRecord& r : rows) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

namespace {

std::string format_number(double v) {
    if (std::isfinite(v) && std::fabs(v) < 1e15 && v == std::floor(v)) {
        return std::to_string(static_cast<long long>(v));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

std::string full_notes(const CheckRecord& r) {
    std::string out = r.notes;
    const auto add = [&](const std::string& s) {
        if (!out.empty()) out += "; ";
        out += s;
    };
    if (r.literal_bound) add("literal bound " + format_number(*r.literal_bound));
    if (r.budget_limited) add("budget-limited");
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

CheckRecord make_record(std::string id, double measured, double bound, std::string notes = {}) {
    CheckRecord r;
    r.id = std::move(id);
    r.measured = measured;
    r.bound = bound;
    r.holds = measured <= bound;
    r.notes = std::move(notes);
    return r;
}

int dx(const Graph& g, const VertexSet& x, const VertexSet& y) {
    return degree_wrt(g, x, y);
}

double beta_r2(const AuditParams& p) {
    return p.constants.beta_value() * p.r * p.r;
}

std::string slot_note(const char* name, const VarpiLookup::Value& v) {
    return std::string(name) + "=" + std::to_string(v.value) + " (slot " + std::to_string(v.slot_used) + ")";
}

}  // namespace

void write_report_csv(std::ostream& os, const AuditReport& report) {
    os << "check_id,measured,bound,holds,notes\n";
    for (const CheckRecord& r : report.rows) {
        os << csv_escape(r.id) << ',' << format_number(r.measured) << ',' << format_number(r.bound) << ','
           << (r.holds ? "true" : "false") << ',' << csv_escape(full_notes(r)) << '\n';
    }
}

void write_report_json(std::ostream& os, const AuditReport& report) {
    nlohmann::ordered_json j;
    j["all_hold"] = report.all_hold();
    auto rows = nlohmann::ordered_json::array();
    for (const CheckRecord& r : report.rows) {
        nlohmann::ordered_json row;
        row["check_id"] = r.id;
        row["measured"] = r.measured;
        row["bound"] = r.bound;
        row["holds"] = r.holds;
        row["notes"] = full_notes(r);
        if (r.literal_bound) row["literal_bound"] = *r.literal_bound;
        row["budget_limited"] = r.budget_limited;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["visit_order"] = report.visit_order;
    os << j.dump(2) << '\n';
}

ComponentClassification classify_components(const Graph& g, const VertexSet& x, int r) {
    const VertexSet xs = make_vertex_set(g, x);
    ComponentClassification out;
    for (auto& comp : components_within(g, set_difference(all_vertices(g), xs))) {
        (dx(g, xs, comp) < r ? out.small : out.large).push_back(std::move(comp));
    }
    return out;
}

CheckRecord check_lemma3(const Graph& g, const VertexSet& x, const std::vector<VertexSet>& subgraphs, int r,
                         const SparsityConstants& c, const std::string& id) {
    if (r < 2) throw InputError("check_lemma3 needs r >= 2");
    const VertexSet xs = make_vertex_set(g, x);
    std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
    for (std::size_t i = 0; i < subgraphs.size(); ++i) {
        const VertexSet s = make_vertex_set(g, subgraphs[i]);
        const std::string name = "subgraph " + std::to_string(i);
        if (s.empty() || !set_intersection(s, xs).empty()) throw InputError(name + " is empty or meets X");
        if (!is_connected_within(g, s)) throw InputError(name + " is not connected");
        for (Vertex v : s) {
            if (used[static_cast<std::size_t>(v)]) throw InputError(name + " overlaps an earlier subgraph");
            used[static_cast<std::size_t>(v)] = 1;
        }
        if (dx(g, xs, s) < r) throw InputError(name + " has D_X below r");
    }
    const double bound = 0.5 * c.beta_value() * r * r * static_cast<double>(xs.size());
    return make_record(id, static_cast<double>(subgraphs.size()), bound);
}

CheckRecord check_lemma4(const Graph& g, const VertexSet& x, const ComponentClassification& cls,
                         const AuditParams& params) {
    (void)g;
    std::size_t total = 0;
    for (const auto& c : cls.small) total += c.size();
    const auto w = params.varpi.at(params.r);
    SparsityConstants c = params.constants;
    c.r = params.r;
    const double bound = w.value * (c.clique_factor() + c.degree_bound()) * static_cast<double>(x.size());
    CheckRecord rec = make_record("lemma4.small_components", static_cast<double>(total), bound, slot_note("varpi(r)", w));
    rec.budget_limited = w.budget_limited;
    return rec;
}

VertexSet Scrub::vertices() const {
    VertexSet out = root;
    for (const auto& t : twigs) out = set_union(out, t);
    return out;
}

std::vector<Node> MarkingState::marked_nodes() const {
    std::vector<Node> out;
    for (Node b = 0; b < static_cast<Node>(marked.size()); ++b) {
        if (marked[static_cast<std::size_t>(b)]) out.push_back(b);
    }
    return out;
}

VertexSet MarkingState::scrub_vertices() const {
    VertexSet out;
    for (const Scrub& s : scrubs) out = set_union(out, s.vertices());
    return out;
}

ForestDecomposition large_component_forest(const Graph& g, const VertexSet& x, const ComponentClassification& cls,
                                           int t) {
    VertexSet blocked = make_vertex_set(g, x);
    for (const auto& c : cls.small) blocked = set_union(blocked, c);
    return rooted_forest_decomposition(g, blocked, t);
}

MarkingState run_marking(const Graph& g, const VertexSet& x, const ForestDecomposition& fd, const AuditParams& params) {
    const VertexSet xs = make_vertex_set(g, x);
    const auto n = static_cast<std::size_t>(g.n());
    for (const auto& bag : fd.bags) {
        for (Vertex v : bag) {
            if (v < 0 || v >= g.n() || set_contains(xs, v)) throw InputError("run_marking: bag holds an X vertex or a bad id");
        }
    }
    MarkingState ms;
    ms.forest = fd;
    ms.marked.assign(static_cast<std::size_t>(fd.node_count()), 0);
    ms.marked_step.assign(static_cast<std::size_t>(fd.node_count()), 0);
    std::vector<char> in_x(n, 0), in_m(n, 0), in_scrub(n, 0);
    for (Vertex v : xs) in_x[static_cast<std::size_t>(v)] = 1;
    const int r = params.r;
    const int scrub_floor = params.varpi.at(params.t + r).value;

    const auto mark = [&](Node b, int step) {
        ms.marked[static_cast<std::size_t>(b)] = 1;
        ms.marked_step[static_cast<std::size_t>(b)] = step;
        for (Vertex v : fd.bags[static_cast<std::size_t>(b)]) in_m[static_cast<std::size_t>(v)] = 1;
    };

    // Step 2.
    for (int tree = 0; tree < fd.tree_count(); ++tree) {
        for (Node b : fd.bfs_order(tree)) {
            ms.visit_order.push_back(b);
            VertexSet root;
            for (Vertex v : fd.bags[static_cast<std::size_t>(b)]) {
                if (!in_m[static_cast<std::size_t>(v)] && !in_scrub[static_cast<std::size_t>(v)]) root.push_back(v);
            }
            if (root.empty()) continue;
            std::vector<char> blocked(n, 0);
            for (std::size_t v = 0; v < n; ++v) blocked[v] = in_x[v] || in_m[v] || in_scrub[v];
            for (Vertex v : root) blocked[static_cast<std::size_t>(v)] = 1;
            std::vector<VertexSet> twigs;
            for (Vertex rv : root) {
                for (Vertex s : g.neighbors(rv)) {
                    if (blocked[static_cast<std::size_t>(s)]) continue;
                    VertexSet comp{s};
                    blocked[static_cast<std::size_t>(s)] = 1;
                    for (std::size_t i = 0; i < comp.size(); ++i) {
                        for (Vertex u : g.neighbors(comp[i])) {
                            if (!blocked[static_cast<std::size_t>(u)]) {
                                blocked[static_cast<std::size_t>(u)] = 1;
                                comp.push_back(u);
                            }
                        }
                    }
                    std::sort(comp.begin(), comp.end());
                    if (dx(g, xs, comp) < r) twigs.push_back(std::move(comp));
                }
            }
            Scrub scrub{b, root, std::move(twigs)};
            const VertexSet all = scrub.vertices();
            if (!is_connected_within(g, all)) continue;
            if (static_cast<int>(all.size()) > scrub_floor && dx(g, xs, all) >= r) {
                mark(b, 2);
                for (Vertex v : all) in_scrub[static_cast<std::size_t>(v)] = 1;
                ms.scrubs.push_back(std::move(scrub));
            }
        }
    }

    // Step 3, children before parents.
    for (int tree = 0; tree < fd.tree_count(); ++tree) {
        std::vector<Node> order = fd.bfs_order(tree);
        std::reverse(order.begin(), order.end());
        for (Node j : order) {
            if (ms.marked[static_cast<std::size_t>(j)] || fd.adj[static_cast<std::size_t>(j)].size() < 3) continue;
            const VertexSet& jb = fd.bags[static_cast<std::size_t>(j)];
            bool fire = false;
            for (Node c : fd.children(j)) {
                const auto sub = fd.subtree(c);
                if (std::any_of(sub.begin(), sub.end(), [&](Node s) { return ms.marked[static_cast<std::size_t>(s)] != 0; })) {
                    continue;
                }
                VertexSet vc;
                for (Node s : sub) vc = set_union(vc, fd.bags[static_cast<std::size_t>(s)]);
                for (const auto& comp : components_within(g, set_difference(vc, jb))) {
                    if (dx(g, xs, comp) >= r) {
                        fire = true;
                        break;
                    }
                }
                if (fire) break;
            }
            if (fire) mark(j, 3);
        }
    }

    // Step 4: a node is the LCA of two marks iff two child subtrees hold marks.
    for (int tree = 0; tree < fd.tree_count(); ++tree) {
        std::vector<Node> order = fd.bfs_order(tree);
        std::reverse(order.begin(), order.end());
        std::vector<char> has(static_cast<std::size_t>(fd.node_count()), 0);
        for (Node v : order) {
            int cnt = 0;
            for (Node c : fd.children(v)) cnt += has[static_cast<std::size_t>(c)];
            if (!ms.marked[static_cast<std::size_t>(v)] && cnt >= 2) mark(v, 4);
            has[static_cast<std::size_t>(v)] = ms.marked[static_cast<std::size_t>(v)] || cnt > 0;
        }
    }

    for (std::size_t v = 0; v < n; ++v) {
        if (in_m[v]) ms.marked_vertices.push_back(static_cast<Vertex>(v));
    }
    return ms;
}

std::vector<UnmarkedSubtree> unmarked_subtrees(const ForestDecomposition& fd, const std::vector<char>& marked) {
    std::vector<UnmarkedSubtree> out;
    std::vector<char> seen(static_cast<std::size_t>(fd.node_count()), 0);
    for (Node s = 0; s < fd.node_count(); ++s) {
        if (marked[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
        UnmarkedSubtree u;
        u.nodes.push_back(s);
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t i = 0; i < u.nodes.size(); ++i) {
            for (Node o : fd.adj[static_cast<std::size_t>(u.nodes[i])]) {
                if (marked[static_cast<std::size_t>(o)]) {
                    u.marked_neighbors.push_back(o);
                } else if (!seen[static_cast<std::size_t>(o)]) {
                    seen[static_cast<std::size_t>(o)] = 1;
                    u.nodes.push_back(o);
                }
            }
        }
        std::sort(u.nodes.begin(), u.nodes.end());
        std::sort(u.marked_neighbors.begin(), u.marked_neighbors.end());
        u.marked_neighbors.erase(std::unique(u.marked_neighbors.begin(), u.marked_neighbors.end()), u.marked_neighbors.end());
        out.push_back(std::move(u));
    }
    return out;
}

std::vector<CheckRecord> check_marking_bounds(const MarkingState& ms, const Graph& g, const VertexSet& x,
                                              const AuditParams& params) {
    (void)g;
    std::vector<CheckRecord> out;
    const double xk = static_cast<double>(x.size());
    const double br2 = beta_r2(params);

    std::size_t worst = 0;
    const auto subs = unmarked_subtrees(ms.forest, ms.marked);
    for (const auto& u : subs) worst = std::max(worst, u.marked_neighbors.size());
    out.push_back(make_record("lemma2.marked_neighbors", static_cast<double>(worst), 2,
                              std::to_string(subs.size()) + " unmarked subtrees"));

    const auto marked = ms.marked_nodes();
    out.push_back(make_record("lemma6.marked_bags", static_cast<double>(marked.size()), 2 * br2 * xk));
    CheckRecord mv = make_record("lemma6.marked_vertices", static_cast<double>(ms.marked_vertices.size()),
                                 2 * br2 * xk * (params.t + 1));
    mv.literal_bound = 2 * br2 * xk * params.t;
    out.push_back(mv);

    const auto w = params.varpi.at(params.t + params.r);
    double total = 0;
    for (const Scrub& s : ms.scrubs) total += s.size();
    CheckRecord l7 = make_record("lemma7.scrub_vertices", total, br2 * br2 * (params.t + 1) * w.value * xk,
                                 std::to_string(ms.scrubs.size()) + " scrubs; " + slot_note("varpi(t+r)", w));
    l7.literal_bound = br2 * br2 * params.t * w.value * xk;
    l7.budget_limited = w.budget_limited;
    out.push_back(l7);

    const double overlap = total - static_cast<double>(ms.scrub_vertices().size());
    out.push_back(make_record("scrubs.disjoint", overlap, 0, "shared vertices across logged scrubs"));
    return out;
}

TreeClassification classify_trees(const MarkingState& ms, const Graph& g, const VertexSet& x, int r) {
    const VertexSet xs = make_vertex_set(g, x);
    const VertexSet scrub = ms.scrub_vertices();
    TreeClassification out;
    for (auto& u : unmarked_subtrees(ms.forest, ms.marked)) {
        StrippedTree tree;
        tree.nodes = std::move(u.nodes);
        tree.marked_neighbors = std::move(u.marked_neighbors);
        for (Node b : tree.nodes) {
            VertexSet bag = set_difference(ms.forest.bags[static_cast<std::size_t>(b)], ms.marked_vertices);
            tree.vertices = set_union(tree.vertices, bag);
            tree.bags.push_back(std::move(bag));
        }
        if (set_difference(tree.vertices, scrub).empty()) {
            ++out.dropped;
            continue;
        }
        tree.dx = dx(g, xs, tree.vertices);
        (tree.dx <= r - 1 ? out.small : out.large).push_back(std::move(tree));
    }
    return out;
}

CheckRecord check_lemma9(const TreeClassification& trees, const VertexSet& scrub_vertices, const VertexSet& x,
                         const AuditParams& params) {
    VertexSet in_small;
    for (const auto& t : trees.small) in_small = set_union(in_small, t.vertices);
    const auto w = params.varpi.at(2 * params.t + params.r);
    const double measured = static_cast<double>(set_difference(in_small, scrub_vertices).size());
    CheckRecord rec = make_record("lemma9.small_trees", measured, 4 * beta_r2(params) * w.value * static_cast<double>(x.size()),
                                  std::to_string(trees.small.size()) + " small trees; " + slot_note("varpi(2t+r)", w));
    rec.budget_limited = w.budget_limited;
    return rec;
}

CheckRecord check_lemma8(const MarkingState& ms, const TreeClassification& trees, const AuditParams& params) {
    const VertexSet scrub = ms.scrub_vertices();
    const auto w = params.varpi.at(params.t + params.r);
    std::size_t worst = 0;
    for (Node b : ms.marked_nodes()) {
        VertexSet hanging;
        for (const auto& t : trees.small) {
            if (std::binary_search(t.marked_neighbors.begin(), t.marked_neighbors.end(), b)) {
                hanging = set_union(hanging, t.vertices);
            }
        }
        worst = std::max(worst, set_difference(hanging, scrub).size());
    }
    CheckRecord rec = make_record("lemma8.pseudo_scrub", static_cast<double>(worst), w.value, slot_note("varpi(t+r)", w));
    rec.budget_limited = w.budget_limited;
    return rec;
}

namespace {

// Tree-internal adjacency over positions of tree.nodes.
std::vector<std::vector<int>> tree_adjacency(const StrippedTree& tree, const ForestDecomposition& fd) {
    std::vector<std::vector<int>> adj(tree.nodes.size());
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        for (Node o : fd.adj[static_cast<std::size_t>(tree.nodes[i])]) {
            auto it = std::lower_bound(tree.nodes.begin(), tree.nodes.end(), o);
            if (it != tree.nodes.end() && *it == o) adj[i].push_back(static_cast<int>(it - tree.nodes.begin()));
        }
    }
    return adj;
}

std::vector<int> bfs_parents(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> parent(adj.size(), -2);
    parent[static_cast<std::size_t>(src)] = -1;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int o : adj[static_cast<std::size_t>(v)]) {
            if (parent[static_cast<std::size_t>(o)] == -2) {
                parent[static_cast<std::size_t>(o)] = v;
                q.push(o);
            }
        }
    }
    return parent;
}

std::vector<int> walk_back(const std::vector<int>& parent, int to) {
    std::vector<int> path;
    for (int v = to; v >= 0; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

int attach_point(const StrippedTree& tree, const ForestDecomposition& fd, Node marked) {
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        const auto& a = fd.adj[static_cast<std::size_t>(tree.nodes[i])];
        if (std::find(a.begin(), a.end(), marked) != a.end()) return static_cast<int>(i);
    }
    throw InputError("marked neighbour is not adjacent to the tree");
}

}  // namespace

CentralPath central_path(const StrippedTree& tree, const ForestDecomposition& fd, const Graph& g, const VertexSet& x) {
    CentralPath out;
    if (tree.nodes.empty()) return out;
    const auto adj = tree_adjacency(tree, fd);
    const auto to_nodes = [&](const std::vector<int>& idx) {
        std::vector<Node> nodes;
        for (int i : idx) nodes.push_back(tree.nodes[static_cast<std::size_t>(i)]);
        return nodes;
    };
    if (tree.marked_neighbors.size() >= 2) {
        const int s = attach_point(tree, fd, tree.marked_neighbors[0]);
        const int e = attach_point(tree, fd, tree.marked_neighbors[1]);
        out.nodes = to_nodes(walk_back(bfs_parents(adj, s), e));
        return out;
    }
    int start = 0;
    if (tree.marked_neighbors.size() == 1) {
        start = attach_point(tree, fd, tree.marked_neighbors[0]);
    } else {
        out.rooted_fallback = true;
        for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
            const Node p = fd.parent[static_cast<std::size_t>(tree.nodes[i])];
            if (!std::binary_search(tree.nodes.begin(), tree.nodes.end(), p)) {
                start = static_cast<int>(i);
                break;
            }
        }
    }
    const auto parent = bfs_parents(adj, start);
    const VertexSet xs = make_vertex_set(g, x);
    std::vector<int> best{start};
    int best_dx = -1;
    for (std::size_t leaf = 0; leaf < tree.nodes.size(); ++leaf) {
        const bool is_leaf = adj[leaf].size() <= 1;
        if (!is_leaf || (static_cast<int>(leaf) == start && tree.nodes.size() > 1)) continue;
        const auto path = walk_back(parent, static_cast<int>(leaf));
        VertexSet verts;
        for (int i : path) verts = set_union(verts, tree.bags[static_cast<std::size_t>(i)]);
        const int d = dx(g, xs, verts);
        if (d > best_dx) {
            best_dx = d;
            best = path;
        }
    }
    out.nodes = to_nodes(best);
    return out;
}

std::vector<VertexSet> path_decomposition_from_central(const StrippedTree& tree, const ForestDecomposition& fd,
                                                       const CentralPath& path) {
    const auto adj = tree_adjacency(tree, fd);
    const auto index_of = [&](Node b) {
        return static_cast<int>(std::lower_bound(tree.nodes.begin(), tree.nodes.end(), b) - tree.nodes.begin());
    };
    std::vector<int> owner(tree.nodes.size(), -1);
    std::vector<VertexSet> bags;
    std::vector<int> frontier;
    for (std::size_t p = 0; p < path.nodes.size(); ++p) {
        const int i = index_of(path.nodes[p]);
        owner[static_cast<std::size_t>(i)] = static_cast<int>(p);
        bags.push_back(tree.bags[static_cast<std::size_t>(i)]);
        frontier.push_back(i);
    }
    // Multi-source BFS: every off-path node joins the path bag it hangs from.
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        const int v = frontier[head];
        for (int o : adj[static_cast<std::size_t>(v)]) {
            if (owner[static_cast<std::size_t>(o)] >= 0) continue;
            owner[static_cast<std::size_t>(o)] = owner[static_cast<std::size_t>(v)];
            auto& bag = bags[static_cast<std::size_t>(owner[static_cast<std::size_t>(o)])];
            bag = set_union(bag, tree.bags[static_cast<std::size_t>(o)]);
            frontier.push_back(o);
        }
    }
    return bags;
}

ValidationResult validate_path(const Graph& g, const VertexSet& vertices, const std::vector<VertexSet>& bags) {
    const Relabeled sub = induced(g, vertices);
    TreeDecomposition td;
    for (const auto& bag : bags) {
        VertexSet local;
        for (Vertex v : bag) {
            const Vertex l = v >= 0 && v < g.n() ? sub.old_to_new[static_cast<std::size_t>(v)] : -1;
            local.push_back(l < 0 ? sub.graph.n() : l);
        }
        std::sort(local.begin(), local.end());
        td.bags.push_back(std::move(local));
    }
    for (std::size_t i = 1; i < bags.size(); ++i) td.edges.emplace_back(static_cast<Node>(i - 1), static_cast<Node>(i));
    return validate(sub.graph, td);
}

CheckRecord check_lemma10(const std::vector<VertexSet>& pd, const AuditParams& params, const std::string& id) {
    int width = -1;
    for (const auto& bag : pd) width = std::max(width, static_cast<int>(bag.size()) - 1);
    const auto w = params.varpi.at(params.t + params.r);
    CheckRecord rec = make_record(id, std::max(width, 0), (params.t + 1) * (w.value + 1.0), slot_note("varpi(t+r)", w));
    rec.literal_bound = params.t * (w.value + 1.0);
    rec.budget_limited = w.budget_limited;
    return rec;
}

CuttingUpParams cutting_up_params(int pd_width, const AuditParams& params) {
    const double w1 = params.varpi.at(params.t + params.r).value;
    const double w2 = params.varpi.at(2 * params.t + params.r).value;
    const double t1 = params.t + 1;
    CuttingUpParams out;
    out.threshold = (pd_width + 2 * t1 * w1) * w2;
    out.f_hat = (3 * t1 * w1 + t1) * w2 + t1 * (w1 + 1);
    return out;
}

namespace {

Segment make_segment(const Graph& g, const VertexSet& xs, VertexSet vertices, bool tail, int r) {
    Segment s;
    s.tail = tail;
    s.dx = dx(g, xs, vertices);
    for (const auto& comp : components_within(g, vertices)) {
        if (dx(g, xs, comp) >= r) s.has_large_component = true;
    }
    s.vertices = std::move(vertices);
    return s;
}

}  // namespace

std::vector<Segment> cutting_up(const std::vector<VertexSet>& pd, const Graph& g, const VertexSet& x,
                                const AuditParams& params) {
    std::vector<Segment> out;
    if (pd.empty()) return out;
    const VertexSet xs = make_vertex_set(g, x);
    int width = 0;
    for (const auto& bag : pd) width = std::max(width, static_cast<int>(bag.size()) - 1);
    const CuttingUpParams cp = cutting_up_params(width, params);
    std::size_t a = 0;
    for (;;) {
        VertexSet rest;
        for (std::size_t i = a; i < pd.size(); ++i) rest = set_union(rest, pd[i]);
        if (static_cast<double>(rest.size()) <= cp.f_hat) {
            out.push_back(make_segment(g, xs, std::move(rest), true, params.r));
            return out;
        }
        VertexSet span = pd[a];
        std::optional<std::size_t> cut;
        for (std::size_t z = a + 1; z < pd.size(); ++z) {
            span = set_union(span, pd[z]);
            const VertexSet inner = set_difference(span, set_union(pd[a], pd[z]));
            if (static_cast<double>(inner.size()) >= cp.threshold) {
                out.push_back(make_segment(g, xs, inner, false, params.r));
                cut = z;
                break;
            }
        }
        if (!cut) {
            out.push_back(make_segment(g, xs, std::move(rest), true, params.r));
            return out;
        }
        a = *cut;
    }
}

CheckRecord check_lemma11(const std::vector<Segment>& segments, double f_hat, const std::string& id) {
    std::size_t worst = 0;
    int with_large = 0;
    for (const auto& s : segments) {
        worst = std::max(worst, s.vertices.size());
        with_large += s.has_large_component;
    }
    return make_record(id, static_cast<double>(worst), f_hat,
                       std::to_string(segments.size()) + " segments; " + std::to_string(with_large) +
                           " hold a component with D_X >= r");
}

CheckRecord check_lemma12(const TreeClassification& trees, const VertexSet& x, double f_hat, const AuditParams& params) {
    std::size_t total = 0;
    for (const auto& t : trees.large) total += t.vertices.size();
    const auto w2 = params.varpi.at(2 * params.t + params.r);
    const double xk = static_cast<double>(x.size());
    CheckRecord rec = make_record("lemma12.large_trees", static_cast<double>(total),
                                  beta_r2(params) * xk / 2 * (f_hat + w2.value),
                                  std::to_string(trees.large.size()) + " large trees; " + slot_note("varpi(2t+r)", w2));
    rec.literal_bound = 6 * beta_r2(params) * params.t * w2.value * w2.value * xk;
    rec.budget_limited = w2.budget_limited;
    return rec;
}

CheckRecord check_observation1(const Graph& g, const ForestDecomposition& fd) {
    std::vector<VertexSet> below(static_cast<std::size_t>(fd.node_count()));
    int violations = 0;
    int checked = 0;
    for (int tree = 0; tree < fd.tree_count(); ++tree) {
        std::vector<Node> order = fd.bfs_order(tree);
        std::reverse(order.begin(), order.end());
        for (Node b : order) {
            const VertexSet& bag = fd.bags[static_cast<std::size_t>(b)];
            const auto kids = fd.children(b);
            VertexSet all = bag;
            const auto test = [&](const VertexSet& w) {
                ++checked;
                if (components_within(g, w).size() > bag.size()) ++violations;
            };
            for (Node c : kids) {
                const VertexSet& vc = below[static_cast<std::size_t>(c)];
                test(set_union(bag, vc));
                all = set_union(all, vc);
            }
            if (kids.size() != 1) test(all);
            below[static_cast<std::size_t>(b)] = std::move(all);
        }
    }
    return make_record("observation1.components", violations, 0, std::to_string(checked) + " bag/subtree sets checked");
}

AuditReport audit_report(const Graph& g, const VertexSet& x, const AuditParams& params) {
    const VertexSet xs = make_vertex_set(g, x);
    AuditReport report;
    auto& rows = report.rows;
    SparsityConstants c = params.constants;
    c.r = params.r;

    if (g.n() > 0) {
        const SparsityCheck sc = check_sparsity_bounds(g, c);
        rows.push_back(make_record("prop1.avg_degree", boost::rational_cast<double>(sc.average_degree), sc.degree_bound,
                                   "strict inequality"));
        rows.back().holds = sc.degree_holds;
        rows.push_back(make_record("prop2.cliques", static_cast<double>(sc.cliques), sc.clique_bound));
    } else {
        rows.push_back(make_record("prop1.avg_degree", 0, c.degree_bound(), "empty graph"));
        rows.push_back(make_record("prop2.cliques", 0, 0, "empty graph"));
    }

    const ComponentClassification cls = classify_components(g, xs, params.r);
    rows.push_back(check_lemma3(g, xs, cls.large, params.r, c, "lemma3.components"));
    const CheckRecord l4 = check_lemma4(g, xs, cls, params);
    rows.push_back(l4);

    const ForestDecomposition fd = large_component_forest(g, xs, cls, params.t);
    const MarkingState ms = run_marking(g, xs, fd, params);
    report.visit_order = ms.visit_order;
    std::vector<VertexSet> scrub_sets;
    for (const auto& s : ms.scrubs) scrub_sets.push_back(s.vertices());
    rows.push_back(check_lemma3(g, xs, scrub_sets, params.r, c, "lemma3.scrubs"));
    const auto marking = check_marking_bounds(ms, g, xs, params);
    rows.insert(rows.end(), marking.begin(), marking.end());

    const TreeClassification trees = classify_trees(ms, g, xs, params.r);
    const VertexSet scrub_vertices = ms.scrub_vertices();
    const CheckRecord l9 = check_lemma9(trees, scrub_vertices, xs, params);
    rows.push_back(l9);
    if (params.enable_lemma8) rows.push_back(check_lemma8(ms, trees, params));

    std::vector<VertexSet> widest;
    int invalid = 0;
    int fallbacks = 0;
    std::vector<Segment> segments;
    int worst_width = 0;
    for (const auto& tree : trees.large) {
        const CentralPath cp = central_path(tree, ms.forest, g, xs);
        fallbacks += cp.rooted_fallback;
        const auto pd = path_decomposition_from_central(tree, ms.forest, cp);
        if (!validate_path(g, tree.vertices, pd).ok) ++invalid;
        int width = 0;
        for (const auto& bag : pd) width = std::max(width, static_cast<int>(bag.size()) - 1);
        if (widest.empty() || width > worst_width) {
            widest = pd;
            worst_width = width;
        }
        auto segs = cutting_up(pd, g, xs, params);
        segments.insert(segments.end(), segs.begin(), segs.end());
    }
    CheckRecord l10 = check_lemma10(widest, params, "lemma10.path_width");
    l10.notes += "; " + std::to_string(trees.large.size()) + " large trees";
    if (fallbacks) l10.notes += "; " + std::to_string(fallbacks) + " central paths rooted at the tree top (no marked neighbour)";
    rows.push_back(l10);
    rows.push_back(make_record("lemma10.path_valid", invalid, 0, "path decompositions failing validation"));

    const double f_hat = cutting_up_params(static_cast<int>(l10.bound), params).f_hat;
    CheckRecord l11 = check_lemma11(segments, f_hat, "lemma11.segment_size");
    const double w1 = params.varpi.at(params.t + params.r).value;
    const double w2 = params.varpi.at(2 * params.t + params.r).value;
    l11.literal_bound = (3 * params.t * w1 + params.t) * w2 + params.t * (w1 + 1);
    l11.budget_limited = l10.budget_limited;
    rows.push_back(l11);
    const CheckRecord l12 = check_lemma12(trees, xs, f_hat, params);
    rows.push_back(l12);
    rows.push_back(check_observation1(g, fd));

    const CheckRecord* l6v = nullptr;
    const CheckRecord* l7 = nullptr;
    for (const auto& r : rows) {
        if (r.id == "lemma6.marked_vertices") l6v = &r;
        if (r.id == "lemma7.scrub_vertices") l7 = &r;
    }
    const double assembled = static_cast<double>(xs.size()) + l4.bound + l6v->bound + l7->bound + l9.bound + l12.bound;
    CheckRecord total = make_record("main.total", g.n(), assembled, "|X| + lemma 4, 6, 7, 9 and 12 bounds");
    total.budget_limited = l4.budget_limited || l7->budget_limited || l9.budget_limited || l12.budget_limited;
    rows.push_back(total);
    return report;
}

InstanceAudit audit_instance(const Instance& inst, const TableSet& tables, const AuditParams& params,
                             const KernelConfig& config) {
    InstanceAudit out;
    out.kernel = kernelize(inst, tables, config);
    out.modulator = find_modulator(out.kernel.kernel, config.exact_cap);
    out.report = audit_report(out.kernel.kernel.graph, out.modulator, params);
    return out;
}

}  // namespace tmk
