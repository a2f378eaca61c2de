#pragma once

#include <string>
#include <vector>

#include "rigi/graph.hpp"

namespace rigi {

// Edge-list text format: optional first line "vertices <n>", then one edge
// per line "<u> <v>". '#' starts a comment; blank lines ignored. When the
// header is absent, n defaults to 1 + max vertex id.
Graph read_graph(const std::string& text);
Graph read_graph_file(const std::string& path);

std::string write_graph(const Graph& g);

// DOT export; edges in `highlight` get penwidth=3.
std::string write_dot(const Graph& g, const std::vector<Edge>& highlight = {},
                      const std::string& name = "G");

}  // namespace rigi
