#include "tmk/solvers.hpp"

#include <algorithm>
#include <numeric>

#include "tmk/errors.hpp"

namespace tmk {

std::string to_string(ProblemId id) {
    return id == ProblemId::FVS ? "FVS" : "VC";
}

ProblemId parse_problem(std::string_view text) {
    if (text == "FVS" || text == "fvs") return ProblemId::FVS;
    if (text == "VC" || text == "vc") return ProblemId::VC;
    throw InputError("unknown problem '" + std::string(text) + "' (expected FVS or VC)");
}

namespace {

// Mutable search state for the FVS branch and bound.
struct FvsState {
    int n = 0;
    std::vector<int> mult;   // n*n parallel-edge counts, u != v
    std::vector<int> loops;
    std::vector<int> deg;    // loops count twice
    std::vector<char> alive;
    std::vector<char> fixed;  // undeletable
    std::vector<Vertex> chosen;

    int& m(Vertex a, Vertex b) { return mult[static_cast<std::size_t>(a * n + b)]; }
    int m(Vertex a, Vertex b) const { return mult[static_cast<std::size_t>(a * n + b)]; }

    void remove(Vertex v) {
        for (Vertex u = 0; u < n; ++u) {
            if (u == v || !alive[static_cast<std::size_t>(u)]) continue;
            const int k = m(v, u);
            if (k == 0) continue;
            deg[static_cast<std::size_t>(u)] -= k;
            m(v, u) = 0;
            m(u, v) = 0;
        }
        alive[static_cast<std::size_t>(v)] = 0;
        deg[static_cast<std::size_t>(v)] = 0;
        loops[static_cast<std::size_t>(v)] = 0;
    }

    void take(Vertex v) {
        chosen.push_back(v);
        remove(v);
    }

    void add_edge(Vertex a, Vertex b) {
        if (a == b) {
            ++loops[static_cast<std::size_t>(a)];
            deg[static_cast<std::size_t>(a)] += 2;
        } else {
            ++m(a, b);
            ++m(b, a);
            ++deg[static_cast<std::size_t>(a)];
            ++deg[static_cast<std::size_t>(b)];
        }
    }
};

class FvsSearch {
public:
    explicit FvsSearch(const Multigraph& g) {
        root_.n = g.n;
        root_.mult.assign(static_cast<std::size_t>(g.n * g.n), 0);
        root_.loops.assign(static_cast<std::size_t>(g.n), 0);
        root_.deg.assign(static_cast<std::size_t>(g.n), 0);
        root_.alive.assign(static_cast<std::size_t>(g.n), 1);
        root_.fixed.assign(static_cast<std::size_t>(g.n), 0);
        for (Vertex v = 0; v < g.n; ++v) {
            const bool del = static_cast<std::size_t>(v) < g.deletable.size() && g.deletable[static_cast<std::size_t>(v)];
            root_.fixed[static_cast<std::size_t>(v)] = del ? 0 : 1;
        }
        for (const Edge& e : g.edges) {
            if (e.u < 0 || e.v < 0 || e.u >= g.n || e.v >= g.n) throw InputError("multigraph edge out of range");
            root_.add_edge(e.u, e.v);
        }
    }

    std::optional<VertexSet> run() {
        best_size_ = root_.n + 1;
        search(root_);
        if (!best_) return std::nullopt;
        VertexSet out = *best_;
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    // Applies safe reductions; returns false when the state is infeasible.
    static bool reduce(FvsState& s) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = 0; v < s.n; ++v) {
                if (!s.alive[static_cast<std::size_t>(v)]) continue;
                if (s.loops[static_cast<std::size_t>(v)] > 0) {
                    if (s.fixed[static_cast<std::size_t>(v)]) return false;
                    s.take(v);
                    changed = true;
                    continue;
                }
                const int d = s.deg[static_cast<std::size_t>(v)];
                if (d <= 1) {
                    s.remove(v);
                    changed = true;
                    continue;
                }
                if (d != 2) continue;
                Vertex a = -1;
                Vertex b = -1;
                for (Vertex u = 0; u < s.n; ++u) {
                    if (u == v || !s.alive[static_cast<std::size_t>(u)]) continue;
                    const int k = s.m(v, u);
                    if (k == 0) continue;
                    if (k == 2) {
                        a = b = u;
                    } else if (a < 0) {
                        a = u;
                    } else {
                        b = u;
                    }
                }
                const bool v_fixed = s.fixed[static_cast<std::size_t>(v)] != 0;
                if (a == b) {
                    // v and a form a 2-cycle and v has no other neighbour.
                    const bool a_fixed = s.fixed[static_cast<std::size_t>(a)] != 0;
                    if (v_fixed && a_fixed) return false;
                    s.take(a_fixed ? v : a);
                    changed = true;
                    continue;
                }
                if (v_fixed || !s.fixed[static_cast<std::size_t>(a)] || !s.fixed[static_cast<std::size_t>(b)]) {
                    s.remove(v);
                    s.add_edge(a, b);
                    changed = true;
                }
            }
        }
        // Undeletable vertices must already induce a forest.
        std::vector<Vertex> parent(static_cast<std::size_t>(s.n));
        std::iota(parent.begin(), parent.end(), 0);
        const auto find = [&](Vertex x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (Vertex u = 0; u < s.n; ++u) {
            if (!s.alive[static_cast<std::size_t>(u)] || !s.fixed[static_cast<std::size_t>(u)]) continue;
            for (Vertex v = u + 1; v < s.n; ++v) {
                if (!s.alive[static_cast<std::size_t>(v)] || !s.fixed[static_cast<std::size_t>(v)]) continue;
                const int k = s.m(u, v);
                if (k == 0) continue;
                if (k >= 2) return false;
                const Vertex ru = find(u);
                const Vertex rv = find(v);
                if (ru == rv) return false;
                parent[static_cast<std::size_t>(ru)] = rv;
            }
        }
        return true;
    }

    void search(FvsState s) {
        if (static_cast<int>(s.chosen.size()) >= best_size_) return;
        if (!reduce(s)) return;
        if (static_cast<int>(s.chosen.size()) >= best_size_) return;
        Vertex pick = -1;
        int alive_count = 0;
        long edge_twice = 0;
        int max_deg = 0;
        for (Vertex v = 0; v < s.n; ++v) {
            if (!s.alive[static_cast<std::size_t>(v)]) continue;
            ++alive_count;
            edge_twice += s.deg[static_cast<std::size_t>(v)];
            if (!s.fixed[static_cast<std::size_t>(v)] && s.deg[static_cast<std::size_t>(v)] > max_deg) {
                max_deg = s.deg[static_cast<std::size_t>(v)];
                pick = v;
            }
        }
        if (pick < 0) {
            // Only undeletable vertices remain and reduce() verified they form a forest.
            best_size_ = static_cast<int>(s.chosen.size());
            best_ = s.chosen;
            return;
        }
        // A forest keeps at most as many edges as vertices; each deletion
        // removes at most max_deg edges and one vertex.
        const long excess = edge_twice / 2 - alive_count;
        if (excess > 0 && max_deg > 1) {
            const long lb = (excess + max_deg - 2) / (max_deg - 1);
            if (static_cast<long>(s.chosen.size()) + lb >= best_size_) return;
        }
        FvsState del = s;
        del.take(pick);
        search(std::move(del));
        s.fixed[static_cast<std::size_t>(pick)] = 1;
        search(std::move(s));
    }

    FvsState root_;
    int best_size_ = 0;
    std::optional<std::vector<Vertex>> best_;
};

class VcSearch {
public:
    explicit VcSearch(const Graph& g) : g_(g) {}

    VertexSet run() {
        std::vector<char> alive(static_cast<std::size_t>(g_.n()), 1);
        best_ = all_vertices(g_);
        std::vector<Vertex> chosen;
        search(alive, chosen);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    int live_degree(const std::vector<char>& alive, Vertex v) const {
        int d = 0;
        for (Vertex u : g_.neighbors(v)) d += alive[static_cast<std::size_t>(u)];
        return d;
    }

    void search(std::vector<char> alive, std::vector<Vertex> chosen) {
        if (chosen.size() >= best_.size()) return;
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = 0; v < g_.n(); ++v) {
                if (!alive[static_cast<std::size_t>(v)]) continue;
                const int d = live_degree(alive, v);
                if (d == 0) {
                    alive[static_cast<std::size_t>(v)] = 0;
                    changed = true;
                } else if (d == 1) {
                    for (Vertex u : g_.neighbors(v)) {
                        if (alive[static_cast<std::size_t>(u)]) {
                            chosen.push_back(u);
                            alive[static_cast<std::size_t>(u)] = 0;
                            break;
                        }
                    }
                    alive[static_cast<std::size_t>(v)] = 0;
                    changed = true;
                }
            }
        }
        if (chosen.size() >= best_.size()) return;
        Vertex pick = -1;
        int max_deg = 0;
        long edges_twice = 0;
        for (Vertex v = 0; v < g_.n(); ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            const int d = live_degree(alive, v);
            edges_twice += d;
            if (d > max_deg) {
                max_deg = d;
                pick = v;
            }
        }
        if (pick < 0) {
            best_ = chosen;
            return;
        }
        const long edges = edges_twice / 2;
        const long lb = (edges + max_deg - 1) / max_deg;
        if (static_cast<long>(chosen.size()) + lb >= static_cast<long>(best_.size())) return;

        auto with = chosen;
        auto alive_with = alive;
        with.push_back(pick);
        alive_with[static_cast<std::size_t>(pick)] = 0;
        search(std::move(alive_with), std::move(with));

        for (Vertex u : g_.neighbors(pick)) {
            if (alive[static_cast<std::size_t>(u)]) {
                chosen.push_back(u);
                alive[static_cast<std::size_t>(u)] = 0;
            }
        }
        alive[static_cast<std::size_t>(pick)] = 0;
        search(std::move(alive), std::move(chosen));
    }

    const Graph& g_;
    VertexSet best_;
};

}  // namespace

std::optional<VertexSet> min_feedback_vertex_set(const Multigraph& g) {
    return FvsSearch(g).run();
}

VertexSet min_vertex_cover(const Graph& g) {
    return VcSearch(g).run();
}

Solution exact_solve(ProblemId problem, const Graph& g, int cap) {
    if (g.n() > cap) {
        throw CapabilityError("exact_solve is capped at " + std::to_string(cap) + " vertices, got " +
                              std::to_string(g.n()));
    }
    Solution out;
    if (problem == ProblemId::FVS) {
        Multigraph mg{g.n(), g.edges(), std::vector<char>(static_cast<std::size_t>(g.n()), 1)};
        out.witness = *min_feedback_vertex_set(mg);
    } else {
        out.witness = min_vertex_cover(g);
    }
    out.value = static_cast<int>(out.witness.size());
    return out;
}

bool is_solution(ProblemId problem, const Graph& g, const VertexSet& x) {
    if (problem == ProblemId::VC) {
        const auto edges = g.edges();
        return std::all_of(edges.begin(), edges.end(),
                           [&](const Edge& e) { return set_contains(x, e.u) || set_contains(x, e.v); });
    }
    return is_forest(induced(g, set_difference(all_vertices(g), x)).graph);
}

VertexSet approx_feedback_vertex_set(const Graph& g) {
    const int n = g.n();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<double> weight(static_cast<std::size_t>(n), 1.0);
    std::vector<Vertex> stack;
    const auto live_deg = [&](Vertex v) {
        int d = 0;
        for (Vertex u : g.neighbors(v)) d += alive[static_cast<std::size_t>(u)];
        return d;
    };
    for (;;) {
        bool pruned = true;
        while (pruned) {
            pruned = false;
            for (Vertex v = 0; v < n; ++v) {
                if (alive[static_cast<std::size_t>(v)] && live_deg(v) <= 1) {
                    alive[static_cast<std::size_t>(v)] = 0;
                    pruned = true;
                }
            }
        }
        Vertex best = -1;
        double ratio = 0.0;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            const double r = weight[static_cast<std::size_t>(v)] / (live_deg(v) - 1);
            if (best < 0 || r < ratio - 1e-12) {
                best = v;
                ratio = r;
            }
        }
        if (best < 0) break;
        std::vector<int> degs(static_cast<std::size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v) {
            if (alive[static_cast<std::size_t>(v)]) degs[static_cast<std::size_t>(v)] = live_deg(v);
        }
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            weight[static_cast<std::size_t>(v)] -= ratio * (degs[static_cast<std::size_t>(v)] - 1);
            if (v == best || weight[static_cast<std::size_t>(v)] <= 1e-9) {
                alive[static_cast<std::size_t>(v)] = 0;
                stack.push_back(v);
            }
        }
    }
    VertexSet sol = stack;
    std::sort(sol.begin(), sol.end());
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        VertexSet trial = set_difference(sol, VertexSet{*it});
        if (is_solution(ProblemId::FVS, g, trial)) sol = std::move(trial);
    }
    return sol;
}

VertexSet approx_vertex_cover(const Graph& g) {
    std::vector<char> matched(static_cast<std::size_t>(g.n()), 0);
    VertexSet out;
    for (const Edge& e : g.edges()) {
        if (!matched[static_cast<std::size_t>(e.u)] && !matched[static_cast<std::size_t>(e.v)]) {
            matched[static_cast<std::size_t>(e.u)] = 1;
            matched[static_cast<std::size_t>(e.v)] = 1;
            out.push_back(e.u);
            out.push_back(e.v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tmk
