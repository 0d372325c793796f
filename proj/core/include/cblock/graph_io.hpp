#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "cblock/graph.hpp"

namespace cblock {

// Text format: optional '#' comment lines, then "n m", then m lines "u v".
// Loops, duplicates and out-of-range endpoints are rejected with a ParseError
// naming the offending line.

Graph parse_graph(std::string_view text);
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

/// Emits "n m" followed by the edges sorted as (min, max).
std::string serialize_graph(const Graph& g);

std::string format_edge(Edge e);
std::string format_edges(std::span<const Edge> edges);

}  // namespace cblock
