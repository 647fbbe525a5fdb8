#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "edgereg/graph.hpp"

namespace edgereg {

/// Edge-list text: one "u v" pair per line, '#' starts a comment, blank lines
/// are skipped. Tokens are arbitrary labels numbered in order of first
/// appearance. Errors carry the 1-based line number.
Graph parse_edge_list(std::string_view text);

/// One graph6 record (no trailing newline). Errors carry the byte offset.
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// Newline-separated graph6 records; blank lines skipped.
std::vector<Graph> decode_graph6_lines(std::string_view text);

/// Resolves "b-c", "b c" or the concatenated "bc" against the labels of g.
/// Concatenated tokens must split into two labels in exactly one way.
Edge parse_edge_token(const Graph& g, std::string_view token);

}  // namespace edgereg
