#include "tmk/fii.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <sstream>

#include "tmk/errors.hpp"
#include "tmk/solvers.hpp"

namespace tmk {

namespace {

void partitions_into(int i, int blocks, std::vector<int>& cur, const std::vector<int>& slots,
                     std::vector<std::vector<int>>& out) {
    if (i == static_cast<int>(slots.size())) {
        out.push_back(cur);
        return;
    }
    for (int b = 0; b <= blocks; ++b) {
        cur[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])] = b;
        partitions_into(i + 1, std::max(blocks, b + 1), cur, slots, out);
    }
    cur[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])] = -1;
}

int add_capped(int a, int b) {
    if (a == kInfinity || b == kInfinity) return kInfinity;
    return a + b;
}

}  // namespace

std::vector<FvsState> fvs_states(int t) {
    if (t < 0 || t > kFvsSignatureCap) {
        throw CapabilityError("FVS signatures support t <= " + std::to_string(kFvsSignatureCap));
    }
    std::vector<FvsState> out;
    for (unsigned mask = 0; mask < (1u << t); ++mask) {
        std::vector<int> slots;
        for (int i = 0; i < t; ++i) {
            if (!(mask >> i & 1u)) slots.push_back(i);
        }
        std::vector<int> cur(static_cast<std::size_t>(t), -1);
        std::vector<std::vector<int>> parts;
        partitions_into(0, 0, cur, slots, parts);
        for (auto& p : parts) out.push_back({mask, std::move(p)});
    }
    return out;
}

std::size_t state_count(ProblemId problem, int t) {
    return problem == ProblemId::VC ? (std::size_t{1} << t) : fvs_states(t).size();
}

Signature signature_vc(const BoundariedGraph& bg) {
    const int t = bg.t();
    if (t > 20) throw CapabilityError("VC signatures support t <= 20");
    const VertexSet inner = bg.interior();
    Signature s{ProblemId::VC, t, {}};
    s.values.reserve(std::size_t{1} << t);
    for (unsigned mask = 0; mask < (1u << t); ++mask) {
        std::vector<char> out_of_cover(static_cast<std::size_t>(bg.n()), 0);
        for (int i = 0; i < t; ++i) {
            if (!(mask >> i & 1u)) out_of_cover[static_cast<std::size_t>(bg.labels[static_cast<std::size_t>(i)])] = 1;
        }
        bool feasible = true;
        for (const Edge& e : bg.graph.edges()) {
            if (out_of_cover[static_cast<std::size_t>(e.u)] && out_of_cover[static_cast<std::size_t>(e.v)]) feasible = false;
        }
        if (!feasible) {
            s.values.push_back(kInfinity);
            continue;
        }
        VertexSet forced;
        VertexSet rest;
        for (Vertex v : inner) {
            const auto& nb = bg.graph.neighbors(v);
            const bool f = std::any_of(nb.begin(), nb.end(), [&](Vertex u) { return out_of_cover[static_cast<std::size_t>(u)] != 0; });
            (f ? forced : rest).push_back(v);
        }
        const int cover = static_cast<int>(min_vertex_cover(induced(bg.graph, rest).graph).size());
        s.values.push_back(std::popcount(mask) + static_cast<int>(forced.size()) + cover);
    }
    return s;
}

Signature signature_fvs(const BoundariedGraph& bg) {
    const int t = bg.t();
    const auto states = fvs_states(t);
    const VertexSet inner = bg.interior();
    std::vector<int> label_of(static_cast<std::size_t>(bg.n()), -1);
    for (int i = 0; i < t; ++i) label_of[static_cast<std::size_t>(bg.labels[static_cast<std::size_t>(i)])] = i;
    std::vector<int> inner_index(static_cast<std::size_t>(bg.n()), -1);
    for (std::size_t i = 0; i < inner.size(); ++i) inner_index[static_cast<std::size_t>(inner[i])] = static_cast<int>(i);
    const auto edges = bg.graph.edges();

    Signature s{ProblemId::FVS, t, {}};
    s.values.reserve(states.size());
    for (const FvsState& st : states) {
        int blocks = 0;
        for (int b : st.block_of) blocks = std::max(blocks, b + 1);
        const int base = static_cast<int>(inner.size());
        Multigraph mg;
        mg.n = base + blocks;
        mg.deletable.assign(static_cast<std::size_t>(mg.n), 0);
        std::fill(mg.deletable.begin(), mg.deletable.begin() + base, 1);
        const auto map = [&](Vertex v) -> int {
            const int l = label_of[static_cast<std::size_t>(v)];
            if (l < 0) return inner_index[static_cast<std::size_t>(v)];
            const int b = st.block_of[static_cast<std::size_t>(l)];
            return b < 0 ? -1 : base + b;
        };
        for (const Edge& e : edges) {
            const int a = map(e.u);
            const int b = map(e.v);
            if (a < 0 || b < 0) continue;
            mg.edges.push_back({a, b});
        }
        const auto sol = min_feedback_vertex_set(mg);
        s.values.push_back(sol ? static_cast<int>(sol->size()) : kInfinity);
    }
    return s;
}

Signature signature(ProblemId problem, const BoundariedGraph& bg) {
    return problem == ProblemId::VC ? signature_vc(bg) : signature_fvs(bg);
}

std::optional<int> equivalent(const Signature& s1, const Signature& s2) {
    if (s1.problem != s2.problem || s1.t != s2.t || s1.values.size() != s2.values.size()) {
        throw InputError("equivalent: signatures belong to different problems or boundary sizes");
    }
    std::optional<int> c;
    for (std::size_t i = 0; i < s1.values.size(); ++i) {
        const int a = s1.values[i];
        const int b = s2.values[i];
        if ((a == kInfinity) != (b == kInfinity)) return std::nullopt;
        if (a == kInfinity) continue;
        if (!c) c = a - b;
        else if (*c != a - b) return std::nullopt;
    }
    return c.value_or(0);
}

Signature truncate_signature(const Signature& s) {
    if (s.problem != ProblemId::VC) throw CapabilityError("truncate_signature is implemented for VC only");
    Signature out = s;
    const unsigned full = (1u << s.t) - 1;
    for (unsigned mask = 0; mask <= full; ++mask) {
        const unsigned free_bits = full & ~mask;
        // Enumerate supersets of mask.
        for (unsigned sub = free_bits;; sub = (sub - 1) & free_bits) {
            const unsigned sup = mask | sub;
            const int capped = add_capped(s.values[sup], std::popcount(sub));
            out.values[mask] = std::min(out.values[mask], capped);
            if (sub == 0) break;
        }
    }
    return out;
}

NormalizedSignature normalize(const Signature& s) {
    int lo = kInfinity;
    for (int v : s.values) lo = std::min(lo, v);
    NormalizedSignature out;
    out.normalizer = lo == kInfinity ? 0 : lo;
    out.key.reserve(s.values.size());
    for (int v : s.values) out.key.push_back(v == kInfinity ? kInfinity : v - out.normalizer);
    return out;
}

std::string key_to_string(const std::vector<int>& key) {
    std::string out;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) out += ',';
        out += key[i] == kInfinity ? std::string("inf") : std::to_string(key[i]);
    }
    return out;
}

std::vector<int> key_from_string(const std::string& text) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item == "inf") {
            out.push_back(kInfinity);
            continue;
        }
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item.empty()) throw InputError("malformed signature key entry '" + item + "'");
        out.push_back(v);
    }
    return out;
}

const FiiClass* FiiTable::find(const std::vector<int>& key) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), key,
                               [](const FiiClass& c, const std::vector<int>& k) { return c.key < k; });
    if (it == classes.end() || it->key != key) return nullptr;
    return &*it;
}

Signature table_signature(ProblemId problem, const BoundariedGraph& bg) {
    return problem == ProblemId::VC ? truncate_signature(signature_vc(bg)) : signature_fvs(bg);
}

FiiTable build_table(const ProblemSpec& p, int t, int n_max, EnumerationCaps caps) {
    if (p.id == ProblemId::FVS && t > kFvsSignatureCap) {
        throw CapabilityError("FVS tables support t <= " + std::to_string(kFvsSignatureCap));
    }
    const auto members = enumerate_boundaried(t, n_max, ConnectivityRule::BoundaryTouching, caps);
    std::map<std::vector<int>, FiiClass> buckets;
    std::map<std::vector<int>, bool> below_cap;
    for (const BoundariedGraph& bg : members) {
        NormalizedSignature ns = normalize(table_signature(p.id, bg));
        auto [it, fresh] = buckets.try_emplace(ns.key);
        if (fresh) {
            it->second.key = ns.key;
            it->second.representative = bg;
            it->second.normalizer = ns.normalizer;
        }
        ++it->second.members;
        if (bg.n() < n_max) below_cap[ns.key] = true;
    }
    FiiTable table;
    table.problem = p.id;
    table.t = t;
    table.n_max = n_max;
    table.classes_below_cap = below_cap.size();
    for (auto& [key, cls] : buckets) {
        table.varpi = std::max(table.varpi, cls.representative.n());
        table.classes.push_back(std::move(cls));
    }
    return table;
}

std::optional<Lookup> lookup_representative(const FiiTable& table, const BoundariedGraph& bg) {
    if (bg.t() != table.t) {
        throw InputError("lookup_representative: table has t=" + std::to_string(table.t) + " but the graph has t=" +
                         std::to_string(bg.t()));
    }
    const NormalizedSignature ns = normalize(table_signature(table.problem, bg));
    const FiiClass* cls = table.find(ns.key);
    if (!cls) return std::nullopt;
    return Lookup{cls, ns.normalizer - cls->normalizer};
}

void write_table(std::ostream& os, const FiiTable& table) {
    os << "tmk-fii-table " << kTableFormatVersion << '\n';
    os << "problem " << to_string(table.problem) << '\n';
    os << "t " << table.t << '\n';
    os << "n_max " << table.n_max << '\n';
    os << "varpi " << table.varpi << '\n';
    os << "classes_below_cap " << table.classes_below_cap << '\n';
    os << "classes " << table.classes.size() << '\n';
    for (const FiiClass& c : table.classes) {
        os << "class " << key_to_string(c.key) << ' ' << c.normalizer << ' ' << c.members << ' '
           << encode_boundaried(c.representative) << '\n';
    }
}

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& is) : is_(is) {}

    std::string next() {
        std::string line;
        if (!std::getline(is_, line)) throw ParseError("unexpected end of table file", line_ + 1);
        ++line_;
        return line;
    }

    template <class T>
    T field(const std::string& name) {
        const std::string line = next();
        std::istringstream ls(line);
        std::string word;
        T value{};
        if (!(ls >> word) || word != name || !(ls >> value)) throw ParseError("expected '" + name + " <value>'", line_);
        return value;
    }

    int line() const { return line_; }

private:
    std::istream& is_;
    int line_ = 0;
};

}  // namespace

FiiTable read_table(std::istream& is) {
    LineReader in(is);
    const int version = in.field<int>("tmk-fii-table");
    if (version != kTableFormatVersion) {
        throw ParseError("table format version " + std::to_string(version) + " is not supported (expected " +
                             std::to_string(kTableFormatVersion) + ")",
                         in.line());
    }
    FiiTable table;
    try {
        table.problem = parse_problem(in.field<std::string>("problem"));
    } catch (const InputError& e) {
        throw ParseError(e.what(), in.line());
    }
    table.t = in.field<int>("t");
    table.n_max = in.field<int>("n_max");
    table.varpi = in.field<int>("varpi");
    table.classes_below_cap = in.field<std::size_t>("classes_below_cap");
    const auto count = in.field<std::size_t>("classes");
    for (std::size_t i = 0; i < count; ++i) {
        const std::string line = in.next();
        std::istringstream ls(line);
        std::string word;
        std::string key;
        FiiClass c;
        if (!(ls >> word) || word != "class" || !(ls >> key >> c.normalizer >> c.members)) {
            throw ParseError("malformed class record", in.line());
        }
        std::string rest;
        std::getline(ls, rest);
        try {
            c.key = key_from_string(key);
            c.representative = decode_boundaried(rest);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), in.line());
        }
        if (c.representative.t() != table.t) throw ParseError("representative boundary size differs from t", in.line());
        table.classes.push_back(std::move(c));
    }
    const bool sorted = std::is_sorted(table.classes.begin(), table.classes.end(),
                                       [](const FiiClass& a, const FiiClass& b) { return a.key < b.key; });
    if (!sorted) throw ParseError("class records are not ordered by key", in.line());
    return table;
}

std::string table_file_name(ProblemId problem, int t, int n_max) {
    std::string p = to_string(problem);
    std::transform(p.begin(), p.end(), p.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return "fii-" + p + "-t" + std::to_string(t) + "-n" + std::to_string(n_max) + "-v" +
           std::to_string(kTableFormatVersion) + ".tbl";
}

std::optional<FiiTable> load_table(const std::filesystem::path& dir, ProblemId problem, int t, int n_max) {
    const auto path = dir / table_file_name(problem, t, n_max);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    FiiTable table = read_table(in);
    if (table.problem != problem || table.t != t || table.n_max != n_max) {
        throw ParseError("table file " + path.string() + " does not match its name", 0);
    }
    return table;
}

CachedTable load_or_build_table(const std::filesystem::path& dir, const ProblemSpec& p, int t, int n_max,
                                EnumerationCaps caps) {
    CachedTable out;
    out.path = dir / table_file_name(p.id, t, n_max);
    if (auto cached = load_table(dir, p.id, t, n_max)) {
        out.table = std::move(*cached);
        out.cache_hit = true;
        return out;
    }
    out.table = build_table(p, t, n_max, caps);
    std::filesystem::create_directories(dir);
    const auto tmp = out.path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write " + tmp);
        write_table(os, out.table);
    }
    std::filesystem::rename(tmp, out.path);
    return out;
}

}  // namespace tmk
