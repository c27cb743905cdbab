#include "tmk/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tmk/errors.hpp"

namespace tmk {

namespace {

void check_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.n()) {
        throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                         std::to_string(g.n()) + ")");
    }
}

void check_set(const Graph& g, const VertexSet& s) {
    for (Vertex v : s) check_vertex(g, v);
}

}  // namespace

Graph::Graph(int n) : adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw InputError("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                             ") has an endpoint outside [0, " + std::to_string(n) + ")");
        }
        if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    m_ = 0;
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        m_ += nb.size();
    }
    m_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet all_vertices(const Graph& g) {
    VertexSet out(static_cast<std::size_t>(g.n()));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

VertexSet make_vertex_set(const Graph& g, std::vector<Vertex> w) {
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    check_set(g, w);
    return w;
}

VertexSet boundary(const Graph& g, const VertexSet& w) {
    check_set(g, w);
    std::vector<char> in_w(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : w) in_w[static_cast<std::size_t>(v)] = 1;
    VertexSet out;
    for (Vertex v : w) {
        const auto& nb = g.neighbors(v);
        if (std::any_of(nb.begin(), nb.end(), [&](Vertex u) { return !in_w[static_cast<std::size_t>(u)]; })) {
            out.push_back(v);
        }
    }
    return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& w) {
    check_set(g, w);
    std::vector<char> in_w(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : w) in_w[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    VertexSet out;
    for (Vertex v : w) {
        for (Vertex u : g.neighbors(v)) {
            if (!in_w[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                out.push_back(u);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int degree_wrt(const Graph& g, const VertexSet& x, const VertexSet& y) {
    check_set(g, x);
    check_set(g, y);
    if (!set_intersection(x, y).empty()) throw InputError("degree_wrt: X and Y overlap");
    std::vector<char> in_y(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : y) in_y[static_cast<std::size_t>(v)] = 1;
    int count = 0;
    for (Vertex u : x) {
        const auto& nb = g.neighbors(u);
        if (std::any_of(nb.begin(), nb.end(), [&](Vertex v) { return in_y[static_cast<std::size_t>(v)] != 0; })) {
            ++count;
        }
    }
    return count;
}

Relabeled contract_edge(const Graph& g, Edge e) {
    check_vertex(g, e.u);
    check_vertex(g, e.v);
    if (!g.has_edge(e.u, e.v)) {
        throw InputError("contract_edge: (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         ") is not an edge");
    }
    const Vertex keep = std::min(e.u, e.v);
    const Vertex drop = std::max(e.u, e.v);
    Relabeled out;
    out.old_to_new.resize(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0, next = 0; v < g.n(); ++v) {
        if (v == drop) continue;
        out.old_to_new[static_cast<std::size_t>(v)] = next++;
        out.new_to_old.push_back(v);
    }
    out.old_to_new[static_cast<std::size_t>(drop)] = out.old_to_new[static_cast<std::size_t>(keep)];
    std::vector<Edge> edges;
    for (const Edge& f : g.edges()) {
        const Vertex a = out.old_to_new[static_cast<std::size_t>(f.u)];
        const Vertex b = out.old_to_new[static_cast<std::size_t>(f.v)];
        if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
    }
    out.graph = Graph(g.n() - 1, edges);
    return out;
}

Relabeled induced(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    Relabeled out;
    out.old_to_new.assign(static_cast<std::size_t>(g.n()), -1);
    out.new_to_old = s;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (out.old_to_new[static_cast<std::size_t>(s[i])] != -1) throw InputError("induced: duplicate vertex");
        out.old_to_new[static_cast<std::size_t>(s[i])] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (Vertex v : s) {
        for (Vertex u : g.neighbors(v)) {
            const Vertex a = out.old_to_new[static_cast<std::size_t>(v)];
            const Vertex b = out.old_to_new[static_cast<std::size_t>(u)];
            if (b >= 0 && a < b) edges.push_back({a, b});
        }
    }
    out.graph = Graph(static_cast<int>(s.size()), edges);
    return out;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    // 0: not in s, 1: unvisited member, 2: visited
    std::vector<char> state(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : s) state[static_cast<std::size_t>(v)] = 1;
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex root : s) {
        if (state[static_cast<std::size_t>(root)] != 1) continue;
        VertexSet comp;
        state[static_cast<std::size_t>(root)] = 2;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex u : g.neighbors(v)) {
                if (state[static_cast<std::size_t>(u)] == 1) {
                    state[static_cast<std::size_t>(u)] = 2;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return components_within(g, all_vertices(g));
}

bool is_connected_within(const Graph& g, const VertexSet& s) {
    return components_within(g, s).size() <= 1;
}

bool is_forest(const Graph& g) {
    return g.m() + connected_components(g).size() == static_cast<std::size_t>(g.n());
}

}  // namespace tmk
