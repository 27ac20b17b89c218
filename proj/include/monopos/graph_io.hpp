#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monopos/graph.hpp"

namespace monopos {

/// Decodes one graph6 token. A trailing newline is tolerated; anything else
/// after the token, bytes outside 63..126, a truncated edge vector or
/// non-zero padding bits raise ParseError with the offending byte offset.
Graph parse_graph6(std::string_view text);

/// graph6 encoding in the graph's own vertex order (no canonical relabelling).
std::string emit_graph6(const Graph& g);

/// One graph per non-empty line; an optional ">>graph6<<" header is skipped.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// "n m" on the first line, then m lines "u v" with 0-based endpoints.
/// Lines starting with '#' are comments.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Reads a file holding either a single graph6 token or an edge list; the
/// format is recognised from the first significant line.
Graph read_graph_file(const std::string& path);

}  // namespace monopos
