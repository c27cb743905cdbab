#include "tmk/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>

#include "tmk/errors.hpp"

namespace tmk {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

std::vector<std::vector<Node>> TreeDecomposition::adjacency() const {
    std::vector<std::vector<Node>> adj(bags.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= static_cast<Node>(bags.size()) || b >= static_cast<Node>(bags.size())) continue;
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

std::string Violation::describe() const {
    switch (kind) {
        case ViolationKind::NotATree: return "decomposition edges do not form a tree";
        case ViolationKind::BadVertex: return "bag contains invalid vertex " + std::to_string(u);
        case ViolationKind::UncoveredVertex: return "vertex " + std::to_string(u) + " is in no bag";
        case ViolationKind::UncoveredEdge:
            return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
        case ViolationKind::DisconnectedOccurrence:
            return "bags containing vertex " + std::to_string(u) + " are not connected";
    }
    return "unknown violation";
}

ValidationResult validate(const Graph& g, const TreeDecomposition& td) {
    ValidationResult res;
    const auto add = [&](ViolationKind k, Vertex u, Vertex v = -1) {
        res.ok = false;
        res.violations.push_back({k, u, v});
    };
    const auto nb = static_cast<Node>(td.bags.size());

    bool tree_ok = true;
    for (auto [a, b] : td.edges) {
        if (a < 0 || b < 0 || a >= nb || b >= nb || a == b) tree_ok = false;
    }
    if (nb == 0) {
        tree_ok = tree_ok && td.edges.empty();
    } else if (tree_ok) {
        tree_ok = static_cast<Node>(td.edges.size()) == nb - 1;
        if (tree_ok) {
            const auto adj = td.adjacency();
            std::vector<char> seen(static_cast<std::size_t>(nb), 0);
            std::vector<Node> stack{0};
            seen[0] = 1;
            int count = 0;
            while (!stack.empty()) {
                const Node cur = stack.back();
                stack.pop_back();
                ++count;
                for (Node o : adj[static_cast<std::size_t>(cur)]) {
                    if (!seen[static_cast<std::size_t>(o)]) {
                        seen[static_cast<std::size_t>(o)] = 1;
                        stack.push_back(o);
                    }
                }
            }
            tree_ok = count == nb;
        }
    }
    if (!tree_ok) add(ViolationKind::NotATree, -1);

    std::vector<VertexSet> bags;
    bags.reserve(td.bags.size());
    for (const auto& b : td.bags) {
        VertexSet s = b;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        VertexSet valid;
        for (Vertex v : s) {
            if (v < 0 || v >= g.n()) {
                add(ViolationKind::BadVertex, v);
            } else {
                valid.push_back(v);
            }
        }
        bags.push_back(std::move(valid));
    }

    std::vector<std::vector<Node>> occ(static_cast<std::size_t>(g.n()));
    for (Node i = 0; i < nb; ++i) {
        for (Vertex v : bags[static_cast<std::size_t>(i)]) occ[static_cast<std::size_t>(v)].push_back(i);
    }
    for (Vertex v = 0; v < g.n(); ++v) {
        if (occ[static_cast<std::size_t>(v)].empty()) add(ViolationKind::UncoveredVertex, v);
    }
    for (const Edge& e : g.edges()) {
        const auto& ou = occ[static_cast<std::size_t>(e.u)];
        const bool covered = std::any_of(ou.begin(), ou.end(), [&](Node i) {
            return set_contains(bags[static_cast<std::size_t>(i)], e.v);
        });
        if (!covered) add(ViolationKind::UncoveredEdge, e.u, e.v);
    }
    const auto adj = td.adjacency();
    std::vector<char> has(static_cast<std::size_t>(nb), 0);
    std::vector<char> seen(static_cast<std::size_t>(nb), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        const auto& ov = occ[static_cast<std::size_t>(v)];
        if (ov.size() <= 1) continue;
        for (Node i : ov) has[static_cast<std::size_t>(i)] = 1;
        std::vector<Node> stack{ov.front()};
        seen[static_cast<std::size_t>(ov.front())] = 1;
        std::size_t reached = 0;
        std::vector<Node> touched{ov.front()};
        while (!stack.empty()) {
            const Node cur = stack.back();
            stack.pop_back();
            ++reached;
            for (Node o : adj[static_cast<std::size_t>(cur)]) {
                if (has[static_cast<std::size_t>(o)] && !seen[static_cast<std::size_t>(o)]) {
                    seen[static_cast<std::size_t>(o)] = 1;
                    touched.push_back(o);
                    stack.push_back(o);
                }
            }
        }
        if (reached != ov.size()) add(ViolationKind::DisconnectedOccurrence, v);
        for (Node i : ov) has[static_cast<std::size_t>(i)] = 0;
        for (Node i : touched) seen[static_cast<std::size_t>(i)] = 0;
    }
    return res;
}

namespace {

// Fill-in simulation shared by the exact and heuristic routes.
class Eliminator {
public:
    explicit Eliminator(const Graph& g)
        : n_(g.n()), adj_(static_cast<std::size_t>(g.n()) * static_cast<std::size_t>(g.n()), 0),
          alive_(static_cast<std::size_t>(g.n()), 1) {
        for (const Edge& e : g.edges()) {
            at(e.u, e.v) = 1;
            at(e.v, e.u) = 1;
        }
    }

    std::vector<Vertex> live_neighbors(Vertex v) const {
        std::vector<Vertex> out;
        for (Vertex u = 0; u < n_; ++u) {
            if (u != v && alive_[static_cast<std::size_t>(u)] && at(v, u)) out.push_back(u);
        }
        return out;
    }

    int fill_count(Vertex v) const {
        const auto nb = live_neighbors(v);
        int fill = 0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!at(nb[i], nb[j])) ++fill;
        return fill;
    }

    std::vector<Vertex> eliminate(Vertex v) {
        auto nb = live_neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                at(nb[i], nb[j]) = 1;
                at(nb[j], nb[i]) = 1;
            }
        }
        alive_[static_cast<std::size_t>(v)] = 0;
        return nb;
    }

    bool alive(Vertex v) const { return alive_[static_cast<std::size_t>(v)] != 0; }

private:
    char& at(Vertex a, Vertex b) {
        return adj_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
    }
    char at(Vertex a, Vertex b) const {
        return adj_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
    }

    int n_;
    std::vector<char> adj_;
    std::vector<char> alive_;
};

}  // namespace

int ordering_width(const Graph& g, const std::vector<Vertex>& order) {
    if (g.n() == 0) return -1;
    Eliminator el(g);
    int w = 0;
    for (Vertex v : order) w = std::max(w, static_cast<int>(el.eliminate(v).size()));
    return w;
}

TreeDecomposition compact(TreeDecomposition td) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t ei = 0; ei < td.edges.size() && !changed; ++ei) {
            auto [a, b] = td.edges[ei];
            Node small = -1;
            Node big = -1;
            const auto& ba = td.bags[static_cast<std::size_t>(a)];
            const auto& bb = td.bags[static_cast<std::size_t>(b)];
            if (std::includes(bb.begin(), bb.end(), ba.begin(), ba.end())) {
                small = a;
                big = b;
            } else if (std::includes(ba.begin(), ba.end(), bb.begin(), bb.end())) {
                small = b;
                big = a;
            }
            if (small < 0) continue;
            // Reattach small's neighbours to big, then delete small.
            std::vector<std::pair<Node, Node>> edges;
            for (auto [p, q] : td.edges) {
                if ((p == small && q == big) || (p == big && q == small)) continue;
                if (p == small) p = big;
                if (q == small) q = big;
                edges.emplace_back(p, q);
            }
            td.bags.erase(td.bags.begin() + small);
            for (auto& [p, q] : edges) {
                if (p > small) --p;
                if (q > small) --q;
            }
            td.edges = std::move(edges);
            if (td.root) {
                Node r = *td.root == small ? big : *td.root;
                td.root = r > small ? r - 1 : r;
            }
            changed = true;
        }
    }
    for (auto& e : td.edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(td.edges.begin(), td.edges.end());
    return td;
}

TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order) {
    TreeDecomposition td;
    const int n = g.n();
    if (n == 0) return td;
    if (static_cast<int>(order.size()) != n) throw InputError("elimination ordering must list every vertex once");
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex v = order[i];
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1) {
            throw InputError("elimination ordering must be a permutation");
        }
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    Eliminator el(g);
    td.bags.resize(static_cast<std::size_t>(n));
    std::vector<Node> roots;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex v = order[i];
        auto higher = el.eliminate(v);
        VertexSet bag = higher;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags[i] = std::move(bag);
        if (higher.empty()) {
            roots.push_back(static_cast<Node>(i));
        } else {
            const Vertex next = *std::min_element(higher.begin(), higher.end(), [&](Vertex a, Vertex b) {
                return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)];
            });
            td.edges.emplace_back(static_cast<Node>(i), pos[static_cast<std::size_t>(next)]);
        }
    }
    // Join the trees of separate components into one tree.
    for (std::size_t i = 1; i < roots.size(); ++i) td.edges.emplace_back(roots[i - 1], roots[i]);
    return compact(std::move(td));
}

ExactTreewidth treewidth_exact(const Graph& g, int width_cap, int size_cap) {
    const int n = g.n();
    if (n > size_cap) {
        throw CapabilityError("treewidth_exact supports at most " + std::to_string(size_cap) +
                              " vertices, got " + std::to_string(n));
    }
    ExactTreewidth out;
    if (n == 0) {
        out.width = -1;
        out.decomposition = TreeDecomposition{};
        return out;
    }
    std::vector<std::uint32_t> nbmask(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        nbmask[static_cast<std::size_t>(e.u)] |= 1u << e.v;
        nbmask[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    // q(s, v): vertices outside s + v reachable from v through s.
    const auto q = [&](std::uint32_t s, int v) {
        std::uint32_t reach = 1u << v;
        std::uint32_t frontier = reach;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1) {
                next |= nbmask[static_cast<std::size_t>(__builtin_ctz(f))];
            }
            next &= ~reach;
            reach |= next;
            frontier = next & s;
        }
        return __builtin_popcount(reach & ~s & ~(1u << v));
    };
    const std::size_t full = (std::size_t{1} << n);
    constexpr std::uint8_t kUnset = std::numeric_limits<std::uint8_t>::max();
    std::vector<std::uint8_t> tw(full, kUnset);
    std::vector<std::int8_t> last(full, -1);
    tw[0] = 0;
    for (std::size_t s = 1; s < full; ++s) {
        int best = std::numeric_limits<int>::max();
        int arg = -1;
        for (std::uint32_t rest = static_cast<std::uint32_t>(s); rest; rest &= rest - 1) {
            const int v = __builtin_ctz(rest);
            const auto prev = static_cast<std::uint32_t>(s) & ~(1u << v);
            const int cand = std::max<int>(tw[prev], q(prev, v));
            if (cand < best) {
                best = cand;
                arg = v;
            }
        }
        tw[s] = static_cast<std::uint8_t>(best);
        last[s] = static_cast<std::int8_t>(arg);
    }
    const int width = tw[full - 1];
    if (width > width_cap) return out;
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    auto s = static_cast<std::uint32_t>(full - 1);
    for (int i = n - 1; i >= 0; --i) {
        const int v = last[s];
        order[static_cast<std::size_t>(i)] = v;
        s &= ~(1u << v);
    }
    out.width = width;
    out.decomposition = decomposition_from_ordering(g, order);
    return out;
}

TreeDecomposition tree_decomposition_heuristic(const Graph& g) {
    Eliminator el(g);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(g.n()));
    for (int step = 0; step < g.n(); ++step) {
        Vertex best = -1;
        std::pair<int, int> best_key{std::numeric_limits<int>::max(), 0};
        for (Vertex v = 0; v < g.n(); ++v) {
            if (!el.alive(v)) continue;
            const std::pair<int, int> key{el.fill_count(v), static_cast<int>(el.live_neighbors(v).size())};
            if (key < best_key) {
                best_key = key;
                best = v;
            }
        }
        el.eliminate(best);
        order.push_back(best);
    }
    return decomposition_from_ordering(g, order);
}

TreeDecomposition decompose(const Graph& g, int exact_cap) {
    if (g.n() <= exact_cap) return *treewidth_exact(g, g.n(), exact_cap).decomposition;
    return tree_decomposition_heuristic(g);
}

std::vector<Node> ForestDecomposition::children(Node b) const {
    std::vector<Node> out;
    for (Node o : adj[static_cast<std::size_t>(b)]) {
        if (parent[static_cast<std::size_t>(b)] != o) out.push_back(o);
    }
    return out;
}

std::vector<Node> ForestDecomposition::subtree(Node b) const {
    std::vector<Node> out{b};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (Node c : children(out[i])) out.push_back(c);
    }
    return out;
}

std::vector<Node> ForestDecomposition::bfs_order(int tree) const {
    return subtree(roots[static_cast<std::size_t>(tree)]);
}

int ForestDecomposition::max_bag_size() const {
    int s = 0;
    for (const auto& b : bags) s = std::max(s, static_cast<int>(b.size()));
    return s;
}

ForestDecomposition assemble_forest(const std::vector<TreeDecomposition>& trees,
                                    const std::vector<VertexSet>& components) {
    ForestDecomposition fd;
    for (std::size_t ti = 0; ti < trees.size(); ++ti) {
        const auto& td = trees[ti];
        if (td.bags.empty()) continue;
        const Node offset = fd.node_count();
        const int tree_index = fd.tree_count();
        std::vector<Node> nodes;
        for (std::size_t i = 0; i < td.bags.size(); ++i) {
            fd.bags.push_back(td.bags[i]);
            fd.adj.emplace_back();
            fd.tree_of.push_back(tree_index);
            nodes.push_back(offset + static_cast<Node>(i));
        }
        for (auto [a, b] : td.edges) {
            fd.adj[static_cast<std::size_t>(offset + a)].push_back(offset + b);
            fd.adj[static_cast<std::size_t>(offset + b)].push_back(offset + a);
        }
        for (Node v : nodes) std::sort(fd.adj[static_cast<std::size_t>(v)].begin(), fd.adj[static_cast<std::size_t>(v)].end());
        Node root = offset;
        if (nodes.size() >= 3) {
            for (Node v : nodes) {
                if (fd.adj[static_cast<std::size_t>(v)].size() >= 2) {
                    root = v;
                    break;
                }
            }
        }
        fd.roots.push_back(root);
        fd.components.push_back(ti < components.size() ? components[ti] : VertexSet{});
        fd.nodes_of_tree.push_back(nodes);
    }
    fd.parent.assign(static_cast<std::size_t>(fd.node_count()), -1);
    for (Node root : fd.roots) {
        std::vector<Node> queue{root};
        std::vector<char> seen(static_cast<std::size_t>(fd.node_count()), 0);
        seen[static_cast<std::size_t>(root)] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (Node o : fd.adj[static_cast<std::size_t>(queue[i])]) {
                if (!seen[static_cast<std::size_t>(o)]) {
                    seen[static_cast<std::size_t>(o)] = 1;
                    fd.parent[static_cast<std::size_t>(o)] = queue[i];
                    queue.push_back(o);
                }
            }
        }
    }
    return fd;
}

ForestDecomposition rooted_forest_decomposition(const Graph& g, const VertexSet& x, int t) {
    const VertexSet rest = set_difference(all_vertices(g), make_vertex_set(g, x));
    const auto comps = components_within(g, rest);
    std::vector<TreeDecomposition> trees;
    for (const auto& comp : comps) {
        const Relabeled sub = induced(g, comp);
        TreeDecomposition td = tree_decomposition_heuristic(sub.graph);
        if (td.width() > t) {
            if (sub.graph.n() <= kDefaultExactTreewidthCap) {
                auto exact = treewidth_exact(sub.graph, t);
                if (exact.width) td = *exact.decomposition;
            }
        }
        if (td.width() > t) {
            throw PreconditionError("component containing vertex " + std::to_string(comp.front()) +
                                    " (size " + std::to_string(comp.size()) +
                                    ") has no decomposition of width <= " + std::to_string(t));
        }
        for (auto& bag : td.bags) {
            for (auto& v : bag) v = sub.new_to_old[static_cast<std::size_t>(v)];
            std::sort(bag.begin(), bag.end());
        }
        trees.push_back(std::move(td));
    }
    return assemble_forest(trees, comps);
}

Relabeled induced_by_subtree(const Graph& g, const ForestDecomposition& fd, const std::vector<Node>& nodes) {
    if (nodes.empty()) return induced(g, {});
    std::vector<char> in(static_cast<std::size_t>(fd.node_count()), 0);
    for (Node b : nodes) {
        if (b < 0 || b >= fd.node_count()) throw InputError("induced_by_subtree: node out of range");
        in[static_cast<std::size_t>(b)] = 1;
    }
    std::vector<char> seen(static_cast<std::size_t>(fd.node_count()), 0);
    std::vector<Node> stack{nodes.front()};
    seen[static_cast<std::size_t>(nodes.front())] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        const Node cur = stack.back();
        stack.pop_back();
        ++reached;
        for (Node o : fd.adj[static_cast<std::size_t>(cur)]) {
            if (in[static_cast<std::size_t>(o)] && !seen[static_cast<std::size_t>(o)]) {
                seen[static_cast<std::size_t>(o)] = 1;
                stack.push_back(o);
            }
        }
    }
    const auto distinct = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
    if (reached != distinct) throw InputError("induced_by_subtree: node set is not connected in the decomposition");
    VertexSet verts;
    for (Node b : nodes) verts = set_union(verts, fd.bags[static_cast<std::size_t>(b)]);
    return induced(g, verts);
}

}  // namespace tmk
