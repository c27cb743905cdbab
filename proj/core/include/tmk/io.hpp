#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tmk/graph.hpp"

namespace tmk {

/// Edge list: "u v" per line, 0-indexed, '#' comments, optional "# n N"
/// and "# k K" pragmas. DIMACS: "p edge n m", then 1-indexed "e u v";
/// "c k K" carries the parameter.
enum class GraphFormat { EdgeList, Dimacs };

struct ParsedGraph {
    Graph graph;
    std::optional<int> k;
    std::vector<std::string> warnings;
};

/// Throws ParseError with the offending line; duplicate edges only warn.
ParsedGraph parse_graph(std::istream& is, GraphFormat format);
ParsedGraph parse_graph(const std::string& text, GraphFormat format);

/// Normalised output: header, then edges with u < v in ascending order.
void write_graph(std::ostream& os, const Graph& g, GraphFormat format, std::optional<int> k = std::nullopt);
std::string write_graph(const Graph& g, GraphFormat format, std::optional<int> k = std::nullopt);

/// ".dimacs", ".col" and ".gr" select DIMACS; anything else is an edge list.
GraphFormat format_for_path(const std::filesystem::path& path);
GraphFormat parse_format(const std::string& name);

ParsedGraph read_graph_file(const std::filesystem::path& path, std::optional<GraphFormat> format = std::nullopt);
void write_graph_file(const std::filesystem::path& path, const Graph& g, std::optional<int> k = std::nullopt,
                      std::optional<GraphFormat> format = std::nullopt);

}  // namespace tmk
