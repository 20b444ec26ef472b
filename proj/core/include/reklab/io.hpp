#pragma once

#include "reklab/graph.hpp"

#include <iosfwd>
#include <string>

namespace reklab {

enum class GraphFormat { edge_list, graph6 };

// Edge-list text format: `#` comment lines, then a header line `n <count>`,
// then one `u v` pair per line, 0-indexed.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list_string(const Graph& g);

// graph6 ASCII encoding (McKay). The writer is canonical: N(n) header then
// the upper-triangle bit vector in 6-bit chunks, no trailing newline in the
// returned string. The reader accepts an optional ">>graph6<<" prefix.
Graph read_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

// Whole-file helpers. A .g6 file may hold several graphs (one per line);
// these read/write the first graph only.
Graph read_graph_file(const std::string& path, GraphFormat format);
Graph read_graph_file(const std::string& path); // format inferred from extension
void write_graph_file(const Graph& g, const std::string& path, GraphFormat format);

// Infers the format from a file extension (.el/.txt -> edge list, .g6 ->
// graph6); throws input_error when the extension is not recognized.
GraphFormat format_from_extension(const std::string& path);

} // namespace reklab
