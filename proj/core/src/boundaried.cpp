#include "tmk/boundaried.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "tmk/errors.hpp"

namespace tmk {

BoundariedGraph::BoundariedGraph(Graph g, std::vector<Vertex> lbls) : graph(std::move(g)), labels(std::move(lbls)) {
    std::vector<Vertex> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("boundary labels must name distinct vertices");
    }
    for (Vertex v : labels) {
        if (v < 0 || v >= graph.n()) throw InputError("boundary label names vertex outside the graph");
    }
}

bool BoundariedGraph::is_boundary(Vertex v) const {
    return std::find(labels.begin(), labels.end(), v) != labels.end();
}

VertexSet BoundariedGraph::interior() const {
    VertexSet out;
    for (Vertex v = 0; v < graph.n(); ++v) {
        if (!is_boundary(v)) out.push_back(v);
    }
    return out;
}

BoundariedGraph boundary_only(int t) {
    std::vector<Vertex> labels(static_cast<std::size_t>(t));
    std::iota(labels.begin(), labels.end(), 0);
    return BoundariedGraph(Graph(t), labels);
}

GlueResult glue(const BoundariedGraph& a, const BoundariedGraph& b) {
    if (a.t() != b.t()) {
        throw InputError("glue: boundary sizes differ (" + std::to_string(a.t()) + " vs " + std::to_string(b.t()) + ")");
    }
    GlueResult out;
    out.map_first.resize(static_cast<std::size_t>(a.n()));
    std::iota(out.map_first.begin(), out.map_first.end(), 0);
    out.map_second.assign(static_cast<std::size_t>(b.n()), -1);
    for (int i = 0; i < a.t(); ++i) out.map_second[static_cast<std::size_t>(b.labels[static_cast<std::size_t>(i)])] = a.labels[static_cast<std::size_t>(i)];
    Vertex next = a.n();
    for (Vertex v = 0; v < b.n(); ++v) {
        if (out.map_second[static_cast<std::size_t>(v)] < 0) out.map_second[static_cast<std::size_t>(v)] = next++;
    }
    std::vector<Edge> edges = a.graph.edges();
    for (const Edge& e : b.graph.edges()) {
        const Vertex u = out.map_second[static_cast<std::size_t>(e.u)];
        const Vertex v = out.map_second[static_cast<std::size_t>(e.v)];
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    out.graph = Graph(next, edges);
    out.boundary = a.labels;
    std::sort(out.boundary.begin(), out.boundary.end());
    return out;
}

BoundariedGraph boundaried_subgraph(const Graph& g, const VertexSet& w, const std::vector<Vertex>& labeling) {
    const Relabeled sub = induced(g, w);
    std::vector<Vertex> labels;
    labels.reserve(labeling.size());
    for (Vertex v : labeling) {
        if (v < 0 || v >= g.n() || sub.old_to_new[static_cast<std::size_t>(v)] < 0) {
            throw InputError("boundary vertex " + std::to_string(v) + " is not in W");
        }
        labels.push_back(sub.old_to_new[static_cast<std::size_t>(v)]);
    }
    return BoundariedGraph(sub.graph, labels);
}

Replacement replace_protrusion(const Graph& g, const VertexSet& w, const BoundariedGraph& rep,
                               const std::vector<Vertex>& labeling) {
    const VertexSet ws = make_vertex_set(g, w);
    const VertexSet bd = boundary(g, ws);
    if (rep.t() != static_cast<int>(bd.size())) {
        throw InputError("replacement has " + std::to_string(rep.t()) + " boundary vertices but the protrusion has " +
                         std::to_string(bd.size()));
    }
    std::vector<Vertex> lab_sorted = labeling;
    std::sort(lab_sorted.begin(), lab_sorted.end());
    if (lab_sorted != bd) throw InputError("labeling must be a bijection onto the protrusion boundary");

    const VertexSet restricted = set_difference(ws, bd);
    const VertexSet keep = set_difference(all_vertices(g), restricted);
    const Relabeled rest = induced(g, keep);
    std::vector<Vertex> rest_labels;
    for (Vertex v : labeling) rest_labels.push_back(rest.old_to_new[static_cast<std::size_t>(v)]);
    const GlueResult glued = glue(BoundariedGraph(rest.graph, rest_labels), rep);
    return {glued.graph, rest.old_to_new};
}

namespace {

using Code = unsigned __int128;

std::string hex_code(Code code, int bits) {
    const int digits = std::max(1, (bits + 3) / 4);
    std::string out(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = "0123456789abcdef"[static_cast<unsigned>(code & 0xf)];
        code >>= 4;
    }
    return out;
}

}  // namespace

CanonicalCode canonical_form(const BoundariedGraph& bg) {
    const int n = bg.n();
    const int t = bg.t();
    if (n - t > kCanonicalInteriorCap || n > 15) {
        throw CapabilityError("canonical_form supports at most " + std::to_string(kCanonicalInteriorCap) +
                              " interior vertices (and 15 in total)");
    }
    std::vector<char> adj(static_cast<std::size_t>(n * n), 0);
    for (const Edge& e : bg.graph.edges()) {
        adj[static_cast<std::size_t>(e.u * n + e.v)] = 1;
        adj[static_cast<std::size_t>(e.v * n + e.u)] = 1;
    }
    std::vector<Vertex> order = bg.labels;
    const VertexSet inner = bg.interior();
    order.insert(order.end(), inner.begin(), inner.end());
    const int bits = n * (n - 1) / 2;
    Code best = ~Code{0};
    auto first_inner = order.begin() + t;
    do {
        Code code = 0;
        for (int i = 0; i < n; ++i) {
            const int row = order[static_cast<std::size_t>(i)] * n;
            for (int j = i + 1; j < n; ++j) code = (code << 1) | static_cast<Code>(adj[static_cast<std::size_t>(row + order[static_cast<std::size_t>(j)])]);
        }
        best = std::min(best, code);
    } while (std::next_permutation(first_inner, order.end()));
    if (bits == 0) best = 0;
    return {std::to_string(n) + ":" + std::to_string(t) + ":" + hex_code(best, bits)};
}

bool boundary_touching(const BoundariedGraph& bg) {
    for (const auto& comp : connected_components(bg.graph)) {
        const bool touches = std::any_of(comp.begin(), comp.end(), [&](Vertex v) { return bg.is_boundary(v); });
        if (!touches) return false;
    }
    return true;
}

std::vector<BoundariedGraph> enumerate_boundaried(int t, int n_max, ConnectivityRule rule, EnumerationCaps caps) {
    if (t < 0 || n_max < t) throw InputError("enumerate_boundaried: need 0 <= t <= n_max");
    if (t > caps.max_t || n_max > caps.max_n) {
        throw CapabilityError("enumerate_boundaried caps are t <= " + std::to_string(caps.max_t) + ", n_max <= " +
                              std::to_string(caps.max_n));
    }
    std::vector<Vertex> labels(static_cast<std::size_t>(t));
    std::iota(labels.begin(), labels.end(), 0);
    struct Entry {
        int n;
        std::size_t m;
        CanonicalCode code;
        BoundariedGraph bg;
    };
    std::vector<Entry> out;
    for (int n = t; n <= n_max; ++n) {
        std::vector<Edge> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
        std::map<CanonicalCode, BoundariedGraph> seen;
        const std::uint64_t limit = std::uint64_t{1} << pairs.size();
        std::vector<Edge> edges;
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            edges.clear();
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (mask >> i & 1u) edges.push_back(pairs[i]);
            }
            BoundariedGraph bg(Graph(n, edges), labels);
            if (rule == ConnectivityRule::BoundaryTouching && !boundary_touching(bg)) continue;
            auto code = canonical_form(bg);
            seen.try_emplace(std::move(code), std::move(bg));
        }
        for (auto& [code, bg] : seen) out.push_back({n, bg.graph.m(), code, std::move(bg)});
    }
    std::stable_sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.n, a.m, a.code) < std::tie(b.n, b.m, b.code);
    });
    std::vector<BoundariedGraph> result;
    result.reserve(out.size());
    for (auto& e : out) result.push_back(std::move(e.bg));
    return result;
}

std::string encode_boundaried(const BoundariedGraph& bg) {
    std::ostringstream os;
    os << "n " << bg.n() << " labels";
    for (Vertex v : bg.labels) os << ' ' << v;
    os << " edges";
    for (const Edge& e : bg.graph.edges()) os << ' ' << e.u << '-' << e.v;
    return os.str();
}

BoundariedGraph decode_boundaried(const std::string& text) {
    std::istringstream is(text);
    std::string word;
    int n = -1;
    if (!(is >> word) || word != "n" || !(is >> n) || n < 0) throw InputError("boundaried graph: expected 'n <count>'");
    if (!(is >> word) || word != "labels") throw InputError("boundaried graph: expected 'labels'");
    std::vector<Vertex> labels;
    std::vector<Edge> edges;
    bool in_edges = false;
    while (is >> word) {
        if (word == "edges") {
            in_edges = true;
            continue;
        }
        if (!in_edges) {
            labels.push_back(std::stoi(word));
            continue;
        }
        const auto dash = word.find('-');
        if (dash == std::string::npos) throw InputError("boundaried graph: malformed edge '" + word + "'");
        edges.push_back({std::stoi(word.substr(0, dash)), std::stoi(word.substr(dash + 1))});
    }
    if (!in_edges) throw InputError("boundaried graph: expected 'edges'");
    return BoundariedGraph(Graph(n, edges), labels);
}

}  // namespace tmk
