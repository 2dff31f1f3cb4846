#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "rbmg/graph.hpp"

namespace rbmg {

inline constexpr int kGraphFormatVersion = 1;

// Colored-graph text format, one record per line:
//
//   # comment
//   p cgraph <num_vertices> <num_colors>
//   v <vertex_name> <color_name>
//   e <vertex_name> <vertex_name>
//
// Vertex ids follow the order of the `v` lines. Names are non-empty and
// contain no whitespace or '#'. Self-loops, repeated edges, unknown vertices
// and header count mismatches raise ParseError.
ColoredGraph parse_graph(std::istream& in);
ColoredGraph parse_graph(std::string_view text);

// Vertices in id order, then edges in canonical pair order. Output of
// write_graph parses back to an equal graph and re-writes byte-identically.
void write_graph(std::ostream& out, const ColoredGraph& g);
std::string format_graph(const ColoredGraph& g);

}  // namespace rbmg
