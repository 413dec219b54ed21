#pragma once

#include <iosfwd>
#include <string>

#include "gwi/graph.hpp"

namespace gwi {

/// Reads the edge-list text format: a header line `n m`, then m lines `u v`
/// (0-indexed). Lines starting with `#` and blank lines are skipped.
/// Throws Error(Parse) with a line number on malformed input.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

/// Writes the canonical form: header, then edges (u < v) in lexicographic order, LF endings.
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

}  // namespace gwi
