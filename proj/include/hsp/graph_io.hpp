#pragma once

#include "hsp/graph.hpp"

#include <string>
#include <string_view>

namespace hsp {

// Edge-list text format: first line "n m", then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// Sniffs the format from the first line: a line of decimal integers is an
// edge list, anything else is treated as graph6.
Graph parse_graph_auto(std::string_view text);

// path "-" means stdin
std::string read_input(const std::string& path);

} // namespace hsp
