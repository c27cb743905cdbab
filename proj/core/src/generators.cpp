#include "tmk/generators.hpp"

#include <algorithm>
#include <numeric>

#include "tmk/errors.hpp"

namespace tmk {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw InputError("uniform_below: empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t v = rng();
        if (v < limit) return v % bound;
    }
}

std::string to_string(Family f) {
    switch (f) {
        case Family::PlantedModulator: return "planted-modulator";
        case Family::BoundedDegreeRandom: return "bounded-degree-random";
        case Family::PendantRich: return "pendant-rich";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::PlantedModulator, Family::BoundedDegreeRandom, Family::PendantRich}) {
        if (to_string(f) == name) return f;
    }
    throw InputError("unknown generator family '" + name + "'");
}

namespace {

class Builder {
public:
    Builder(int n, int d) : d_(d), deg_(static_cast<std::size_t>(n), 0) {}

    bool can_take(Vertex v) const { return deg_[static_cast<std::size_t>(v)] < d_; }
    int degree(Vertex v) const { return deg_[static_cast<std::size_t>(v)]; }

    bool add(Vertex u, Vertex v) {
        if (u == v || !can_take(u) || !can_take(v)) return false;
        const Edge e{std::min(u, v), std::max(u, v)};
        if (std::find(edges_.begin(), edges_.end(), e) != edges_.end()) return false;
        edges_.push_back(e);
        ++deg_[static_cast<std::size_t>(u)];
        ++deg_[static_cast<std::size_t>(v)];
        return true;
    }

    const std::vector<Edge>& edges() const { return edges_; }

private:
    int d_;
    std::vector<int> deg_;
    std::vector<Edge> edges_;
};

template <class Pred>
std::vector<Vertex> pick_from(std::mt19937_64& rng, Vertex lo, Vertex hi, Pred ok) {
    std::vector<Vertex> out;
    for (Vertex v = lo; v < hi; ++v) {
        if (ok(v)) out.push_back(v);
    }
    // Partial Fisher-Yates so callers can take a random prefix.
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
        const auto j = i + uniform_below(rng, out.size() - i);
        std::swap(out[i], out[j]);
    }
    return out;
}

Generated finish(const GeneratorSpec& spec, std::mt19937_64& rng, const Builder& b, VertexSet planted) {
    std::vector<Vertex> perm(static_cast<std::size_t>(spec.n));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
    std::vector<Edge> edges;
    for (const Edge& e : b.edges()) edges.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
    for (Vertex& v : planted) v = perm[static_cast<std::size_t>(v)];
    std::sort(planted.begin(), planted.end());
    Generated out;
    out.instance = Instance{Graph(spec.n, edges), spec.k, ProblemSpec::of(spec.problem)};
    out.planted = std::move(planted);
    return out;
}

Generated planted(const GeneratorSpec& spec, std::mt19937_64& rng) {
    const int base = spec.n - spec.k;
    const int want = std::max(1, spec.attach);
    const int least = std::min(2, want);
    if (spec.k > 0 && spec.d < least) throw InputError("degree cap " + std::to_string(spec.d) + " is too small for modulator attachments");
    if (spec.k > 0 && base < least) throw InputError("too few forest vertices for modulator attachments");
    Builder b(spec.n, spec.d);
    if (spec.problem == ProblemId::FVS) {
        // Random forest; one degree unit stays free for attachments.
        for (Vertex v = 1; v < base; ++v) {
            if (uniform_below(rng, 8) == 0) continue;
            const auto cands = pick_from(rng, 0, v, [&](Vertex u) { return b.degree(u) < spec.d - 1; });
            if (!cands.empty()) b.add(v, cands.front());
        }
    }
    VertexSet mod;
    for (int i = 0; i < spec.k; ++i) {
        const Vertex m = base + i;
        mod.push_back(m);
        const int count = least + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(want - least + 1)));
        const auto cands = pick_from(rng, 0, base, [&](Vertex u) { return b.can_take(u); });
        if (static_cast<int>(cands.size()) < least) {
            throw InputError("degree cap " + std::to_string(spec.d) + " leaves no room to attach modulator vertex " +
                             std::to_string(i));
        }
        for (int j = 0; j < count && j < static_cast<int>(cands.size()); ++j) b.add(m, cands[static_cast<std::size_t>(j)]);
        if (i > 0 && uniform_below(rng, 2) == 0) b.add(m, m - 1);
    }
    return finish(spec, rng, b, std::move(mod));
}

Generated bounded_degree(const GeneratorSpec& spec, std::mt19937_64& rng) {
    Builder b(spec.n, spec.d);
    if (spec.n >= 2) {
        const long attempts = static_cast<long>(spec.n) * spec.d / 2;
        for (long i = 0; i < attempts; ++i) {
            const auto u = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(spec.n)));
            const auto v = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(spec.n)));
            b.add(u, v);
        }
    }
    return finish(spec, rng, b, {});
}

Generated pendant_rich(const GeneratorSpec& spec, std::mt19937_64& rng) {
    const int core = std::clamp(spec.k, 1, spec.n);
    Builder b(spec.n, spec.d);
    for (Vertex v = 1; v < core; ++v) b.add(v - 1, v);
    if (core >= 3) b.add(core - 1, 0);
    Vertex next = core;
    while (next < spec.n) {
        const int left = spec.n - next;
        const int kind = static_cast<int>(uniform_below(rng, 3));
        const int size = std::min(left, kind == 1 ? 3 : 1 + static_cast<int>(uniform_below(rng, 4)));
        const Vertex first = next;
        for (int i = 1; i < size; ++i) b.add(first + i - 1, first + i);
        if (kind == 1 && size == 3) b.add(first, first + 2);
        next += size;
        const auto anchors = pick_from(rng, 0, first, [&](Vertex u) { return b.can_take(u) && (u < core || uniform_below(rng, 2) == 0); });
        if (!anchors.empty()) b.add(first, anchors.front());
        if (anchors.size() >= 2 && uniform_below(rng, 3) == 0) b.add(first + size - 1, anchors[1]);
    }
    return finish(spec, rng, b, {});
}

}  // namespace

Generated generate(const GeneratorSpec& spec) {
    if (spec.n < 0 || spec.k < 0) throw InputError("generator needs n >= 0 and k >= 0");
    if (spec.d < 1) throw InputError("degree cap must be positive");
    if (spec.family == Family::PlantedModulator && spec.k > spec.n) throw InputError("planted modulator larger than n");
    std::mt19937_64 rng(spec.seed);
    switch (spec.family) {
        case Family::PlantedModulator: return planted(spec, rng);
        case Family::BoundedDegreeRandom: return bounded_degree(spec, rng);
        case Family::PendantRich: return pendant_rich(spec, rng);
    }
    throw InputError("unknown generator family");
}

}  // namespace tmk
