#pragma once

#include <string>

#include "bookcross/graph.hpp"

namespace bookcross {

// graph6 text format, single line, n <= 62 (one-byte header only).
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// Edge list: lines "u v", optional first line "n m" header.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

}  // namespace bookcross
