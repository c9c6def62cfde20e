#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ctsp/graph.hpp"

namespace ctsp {

enum class GraphFormat { graph6, edge_list };

GraphFormat parse_format_name(std::string_view name);

/// graph6 (optional ">>graph6<<" header) or edge list ("u v" per line,
/// 0-based, '#' comments; a "# n=<count>" comment fixes the order).
Graph parse_graph(std::string_view text, GraphFormat format);

/// graph6 output requires a simple graph. Edge lists are sorted and carry a
/// "# n=<count>" line so isolated vertices survive a round trip.
std::string serialize_graph(const Graph& g, GraphFormat format);

/// One graph per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// Reads a file and picks the format from the extension (.g6 / .graph6 vs
/// anything else) unless `format_hint` is non-empty.
std::vector<Graph> read_graph_file(const std::string& path, std::string_view format_hint = {});

struct DotStyle {
  /// Optional per-edge traversal multiplicity (e.g. of a tour); shown as labels.
  std::vector<int> edge_uses;
  /// Optional per-edge highlight (e.g. factor edges), drawn bold.
  std::vector<char> highlight;
};

std::string to_dot(const Graph& g, const DotStyle& style = {});

}  // namespace ctsp
