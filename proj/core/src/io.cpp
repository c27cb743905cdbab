#include "tmk/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "tmk/errors.hpp"

namespace tmk {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

long long to_int(const std::string& s, int line) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError("expected an integer, got '" + s + "'", line);
    return v;
}

struct EdgeCollector {
    std::set<Edge> edges;
    std::vector<std::string> warnings;

    void add(long long u, long long v, int line) {
        if (u < 0 || v < 0) throw ParseError("negative vertex id", line);
        if (u > 100000000 || v > 100000000) throw ParseError("vertex id too large", line);
        if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), line);
        const Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
        if (!edges.insert(e).second) {
            warnings.push_back("line " + std::to_string(line) + ": duplicate edge " + std::to_string(u) + " " +
                               std::to_string(v) + " ignored");
        }
    }
};

ParsedGraph parse_edge_list(std::istream& is) {
    ParsedGraph out;
    EdgeCollector c;
    std::optional<long long> n;
    std::string line;
    int no = 0;
    while (std::getline(is, line)) {
        ++no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            const auto words = split(line.substr(hash + 1));
            if (words.size() == 2 && words[0] == "n") n = to_int(words[1], no);
            if (words.size() == 2 && words[0] == "k") out.k = static_cast<int>(to_int(words[1], no));
            line.erase(hash);
        }
        const auto words = split(line);
        if (words.empty()) continue;
        if (words.size() != 2) throw ParseError("expected 'u v'", no);
        const long long u = to_int(words[0], no);
        const long long v = to_int(words[1], no);
        c.add(u, v, no);
    }
    long long count = 0;
    for (const Edge& e : c.edges) count = std::max<long long>(count, e.v + 1);
    if (n) {
        if (*n < count) throw ParseError("vertex count " + std::to_string(*n) + " is smaller than the largest id + 1", 0);
        count = *n;
    }
    std::vector<Edge> edges(c.edges.begin(), c.edges.end());
    out.graph = Graph(static_cast<int>(count), edges);
    out.warnings = std::move(c.warnings);
    return out;
}

ParsedGraph parse_dimacs(std::istream& is) {
    ParsedGraph out;
    EdgeCollector c;
    std::optional<long long> n;
    long long declared_m = 0;
    std::string line;
    int no = 0;
    while (std::getline(is, line)) {
        ++no;
        const auto words = split(line);
        if (words.empty()) continue;
        if (words[0] == "c") {
            if (words.size() == 3 && words[1] == "k") out.k = static_cast<int>(to_int(words[2], no));
            continue;
        }
        if (words[0] == "p") {
            if (n) throw ParseError("second 'p' line", no);
            if (words.size() != 4) throw ParseError("expected 'p edge <n> <m>'", no);
            n = to_int(words[2], no);
            declared_m = to_int(words[3], no);
            if (*n < 0 || declared_m < 0) throw ParseError("negative size in header", no);
            continue;
        }
        if (words[0] == "e") {
            if (!n) throw ParseError("edge before the 'p' header", no);
            if (words.size() != 3) throw ParseError("expected 'e <u> <v>'", no);
            const long long u = to_int(words[1], no);
            const long long v = to_int(words[2], no);
            if (u < 1 || v < 1 || u > *n || v > *n) throw ParseError("vertex id outside 1.." + std::to_string(*n), no);
            c.add(u - 1, v - 1, no);
            continue;
        }
        throw ParseError("unknown line type '" + words[0] + "'", no);
    }
    if (!n) throw ParseError("missing 'p edge <n> <m>' header", no);
    if (static_cast<long long>(c.edges.size()) != declared_m) {
        c.warnings.push_back("header declares " + std::to_string(declared_m) + " edges, found " +
                             std::to_string(c.edges.size()) + " distinct");
    }
    std::vector<Edge> edges(c.edges.begin(), c.edges.end());
    out.graph = Graph(static_cast<int>(*n), edges);
    out.warnings = std::move(c.warnings);
    return out;
}

}  // namespace

ParsedGraph parse_graph(std::istream& is, GraphFormat format) {
    return format == GraphFormat::Dimacs ? parse_dimacs(is) : parse_edge_list(is);
}

ParsedGraph parse_graph(const std::string& text, GraphFormat format) {
    std::istringstream is(text);
    return parse_graph(is, format);
}

void write_graph(std::ostream& os, const Graph& g, GraphFormat format, std::optional<int> k) {
    if (format == GraphFormat::Dimacs) {
        if (k) os << "c k " << *k << '\n';
        os << "p edge " << g.n() << ' ' << g.m() << '\n';
        for (const Edge& e : g.edges()) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
        return;
    }
    os << "# n " << g.n() << '\n';
    if (k) os << "# k " << *k << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

std::string write_graph(const Graph& g, GraphFormat format, std::optional<int> k) {
    std::ostringstream os;
    write_graph(os, g, format, k);
    return os.str();
}

GraphFormat format_for_path(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    return ext == ".dimacs" || ext == ".col" || ext == ".gr" ? GraphFormat::Dimacs : GraphFormat::EdgeList;
}

GraphFormat parse_format(const std::string& name) {
    if (name == "edgelist" || name == "edge-list") return GraphFormat::EdgeList;
    if (name == "dimacs") return GraphFormat::Dimacs;
    throw InputError("unknown graph format '" + name + "' (expected edgelist or dimacs)");
}

ParsedGraph read_graph_file(const std::filesystem::path& path, std::optional<GraphFormat> format) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    try {
        return parse_graph(in, format.value_or(format_for_path(path)));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), 0);
    }
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, std::optional<int> k,
                      std::optional<GraphFormat> format) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw InputError("cannot write " + path.string());
    write_graph(os, g, format.value_or(format_for_path(path)), k);
}

}  // namespace tmk
