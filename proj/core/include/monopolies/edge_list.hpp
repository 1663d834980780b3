#pragma once

#include <iosfwd>
#include <string>

#include "monopolies/graph.hpp"

namespace monopolies {

// Plain text graph format: a header line "n m" followed by m lines "u v"
// with 0-based endpoints. Blank lines after the last edge are ignored, as
// are trailing carriage returns. Parse errors cite the offending line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

// Canonical form: header, then edges sorted with u < v on each line.
// parse_edge_list(emit_edge_list(g)) reproduces g exactly.
std::string emit_edge_list(const Graph& g);

} // namespace monopolies
