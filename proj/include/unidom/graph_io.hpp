#pragma once

#include "unidom/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unidom {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// graph6: https://users.cecs.anu.edu.au/~bdm/data/formats.txt
// Orders up to 62 use the one-byte header; 63 and 64 use the four-byte form.
std::string emit_graph6(const Graph& g);
/// Accepts one line, with or without a trailing newline or the ">>graph6<<"
/// prefix. Throws ParseError on a malformed header or a payload of the wrong
/// length; nonzero padding bits are rejected.
Graph parse_graph6(std::string_view text);

/// "n m" header line followed by m lines of "u v". Blank lines and lines
/// starting with '#' are skipped.
std::string emit_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

/// Undirected DOT. labels, when non-empty, must have one entry per vertex.
std::string emit_dot(const Graph& g, const std::vector<std::string>& labels = {});

enum class GraphFormat { graph6, edge_list };

/// Edge lists start with a digit; graph6 never does.
GraphFormat detect_format(std::string_view text);
Graph parse_graph(std::string_view text);
/// Reads every non-empty graph6 line (or a single edge list) from a file.
/// Throws std::runtime_error if the file cannot be read.
std::vector<Graph> read_graph_file(const std::string& path);

}  // namespace unidom
