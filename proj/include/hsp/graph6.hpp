#pragma once

#include "hsp/graph.hpp"

#include <string>
#include <string_view>

namespace hsp {

// graph6 text format: 6-bit groups offset by 63, upper-triangle bits in
// column order. Round trips bit-exactly.
std::string encode_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" header and trailing newline; anything
// else malformed raises FormatError.
Graph parse_graph6(std::string_view text);

} // namespace hsp
