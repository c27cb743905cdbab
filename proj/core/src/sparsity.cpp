#include "tmk/sparsity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tmk/errors.hpp"

namespace tmk {

double SparsityConstants::degree_bound() const {
    return beta_value() * r * r;
}

double SparsityConstants::clique_factor() const {
    const double log_r = std::log(static_cast<double>(r)) / std::log(log_base);
    return std::exp2(tau_value() * r * log_r);
}

Rational average_degree(const Graph& g) {
    if (g.n() == 0) throw InputError("average_degree: empty graph");
    return Rational(2 * static_cast<std::int64_t>(g.m()), g.n());
}

namespace {

// Counts cliques whose smallest vertex is fixed and whose remaining members
// are drawn from `cand` (all adjacent to everything chosen so far).
std::uint64_t extend_cliques(const Graph& g, const std::vector<Vertex>& cand) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        ++total;
        std::vector<Vertex> next;
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
            if (g.has_edge(cand[i], cand[j])) next.push_back(cand[j]);
        }
        total += extend_cliques(g, next);
    }
    return total;
}

}  // namespace

std::uint64_t count_cliques(const Graph& g) {
    return extend_cliques(g, all_vertices(g));
}

namespace {

// Backtracking search for a subdivision of h in g. Branch vertices are
// assigned in degree-descending order of h; every h-edge is routed as soon
// as both its endpoints are placed, trying shorter paths first.
class SubdivisionSearch {
public:
    SubdivisionSearch(const Graph& g, const Graph& h) : g_(g), h_(h) {
        order_.resize(static_cast<std::size_t>(h.n()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
        candidates_.resize(static_cast<std::size_t>(h.n()));
        for (Vertex hv = 0; hv < h.n(); ++hv) {
            for (Vertex gv = 0; gv < g.n(); ++gv) {
                if (g.degree(gv) >= h.degree(hv)) candidates_[static_cast<std::size_t>(hv)].push_back(gv);
            }
            std::stable_sort(candidates_[static_cast<std::size_t>(hv)].begin(),
                             candidates_[static_cast<std::size_t>(hv)].end(),
                             [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        }
        // Task list: place order_[i], then route its edges to earlier vertices.
        std::vector<int> position(static_cast<std::size_t>(h.n()));
        for (std::size_t i = 0; i < order_.size(); ++i) position[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
        for (std::size_t i = 0; i < order_.size(); ++i) {
            tasks_.push_back({true, order_[i], -1});
            for (Vertex w : h.neighbors(order_[i])) {
                if (position[static_cast<std::size_t>(w)] < static_cast<int>(i)) tasks_.push_back({false, order_[i], w});
            }
        }
        image_.assign(static_cast<std::size_t>(h.n()), -1);
        used_.assign(static_cast<std::size_t>(g.n()), 0);
        branch_of_.assign(static_cast<std::size_t>(g.n()), -1);
        pending_.resize(static_cast<std::size_t>(h.n()));
        for (Vertex hv = 0; hv < h.n(); ++hv) pending_[static_cast<std::size_t>(hv)] = h.degree(hv);
        routed_.assign(static_cast<std::size_t>(h.n()) * static_cast<std::size_t>(h.n()), 0);
    }

    bool run() { return step(0); }

private:
    struct Task {
        bool place;
        Vertex a;
        Vertex b;
    };

    bool step(std::size_t idx) {
        if (idx == tasks_.size()) return true;
        const Task& task = tasks_[idx];
        if (task.place) {
            for (Vertex gv : candidates_[static_cast<std::size_t>(task.a)]) {
                if (used_[static_cast<std::size_t>(gv)]) continue;
                image_[static_cast<std::size_t>(task.a)] = gv;
                used_[static_cast<std::size_t>(gv)] = 1;
                branch_of_[static_cast<std::size_t>(gv)] = task.a;
                if (feasible() && step(idx + 1)) return true;
                branch_of_[static_cast<std::size_t>(gv)] = -1;
                used_[static_cast<std::size_t>(gv)] = 0;
                image_[static_cast<std::size_t>(task.a)] = -1;
            }
            return false;
        }
        const Vertex from = image_[static_cast<std::size_t>(task.a)];
        const Vertex to = image_[static_cast<std::size_t>(task.b)];
        const int free_count = static_cast<int>(std::count(used_.begin(), used_.end(), 0));
        for (int len = 1; len <= free_count + 1; ++len) {
            if (route(from, to, len, idx)) return true;
        }
        return false;
    }

    // Enumerates paths from `cur` to `target` with exactly `remaining` edges
    // whose interior avoids used vertices; recurses into the next task.
    bool route(Vertex cur, Vertex target, int remaining, std::size_t idx) {
        if (remaining == 1) {
            if (!g_.has_edge(cur, target)) return false;
            const Task& task = tasks_[idx];
            mark_routed(task.a, task.b, true);
            const bool ok = feasible() && step(idx + 1);
            if (!ok) mark_routed(task.a, task.b, false);
            return ok;
        }
        for (Vertex nxt : g_.neighbors(cur)) {
            if (used_[static_cast<std::size_t>(nxt)]) continue;
            used_[static_cast<std::size_t>(nxt)] = 1;
            if (route(nxt, target, remaining - 1, idx)) return true;
            used_[static_cast<std::size_t>(nxt)] = 0;
        }
        return false;
    }

    void mark_routed(Vertex a, Vertex b, bool on) {
        const auto n = static_cast<std::size_t>(h_.n());
        routed_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = on;
        routed_[static_cast<std::size_t>(b) * n + static_cast<std::size_t>(a)] = on;
        pending_[static_cast<std::size_t>(a)] += on ? -1 : 1;
        pending_[static_cast<std::size_t>(b)] += on ? -1 : 1;
    }

    bool is_routed(Vertex a, Vertex b) const {
        return routed_[static_cast<std::size_t>(a) * static_cast<std::size_t>(h_.n()) + static_cast<std::size_t>(b)] != 0;
    }

    // Each placed branch vertex needs one free exit per unrouted h-edge.
    bool feasible() const {
        for (Vertex hv = 0; hv < h_.n(); ++hv) {
            const Vertex gv = image_[static_cast<std::size_t>(hv)];
            if (gv < 0) continue;
            const int need = pending_[static_cast<std::size_t>(hv)];
            if (need == 0) continue;
            int avail = 0;
            for (Vertex u : g_.neighbors(gv)) {
                if (!used_[static_cast<std::size_t>(u)]) {
                    ++avail;
                } else {
                    const Vertex other = branch_of_[static_cast<std::size_t>(u)];
                    if (other >= 0 && h_.has_edge(hv, other) && !is_routed(hv, other)) ++avail;
                }
            }
            if (avail < need) return false;
        }
        return true;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> candidates_;
    std::vector<Task> tasks_;
    std::vector<Vertex> image_;
    std::vector<char> used_;
    std::vector<Vertex> branch_of_;
    std::vector<int> pending_;
    std::vector<char> routed_;
};

}  // namespace

bool contains_topological_minor(const Graph& g, const Graph& h, int h_cap) {
    if (h.n() > h_cap) {
        throw CapabilityError("topological minor test supports patterns with at most " +
                              std::to_string(h_cap) + " vertices, got " + std::to_string(h.n()));
    }
    if (h.n() > g.n() || h.m() > g.m()) return false;
    return SubdivisionSearch(g, h).run();
}

SparsityCheck check_sparsity_bounds(const Graph& g, const SparsityConstants& c) {
    SparsityCheck out;
    out.degree_bound = c.degree_bound();
    out.clique_bound = c.clique_factor() * g.n();
    if (g.n() > 0) {
        out.average_degree = average_degree(g);
        out.degree_holds = boost::rational_cast<double>(out.average_degree) < out.degree_bound;
    }
    out.cliques = count_cliques(g);
    out.cliques_holds = static_cast<double>(out.cliques) <= out.clique_bound;
    return out;
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.push_back({u, a + v});
    return Graph(a + b, e);
}

Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, e);
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Graph(leaves + 1, e);
}

Graph grid_graph(int rows, int cols) {
    std::vector<Edge> e;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const int v = i * cols + j;
            if (j + 1 < cols) e.push_back({v, v + 1});
            if (i + 1 < rows) e.push_back({v, v + cols});
        }
    }
    return Graph(rows * cols, e);
}

Graph petersen_graph() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, i + 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph(10, e);
}

}  // namespace tmk
