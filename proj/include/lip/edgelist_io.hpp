#pragma once

#include <string>
#include <string_view>

#include "lip/graph.hpp"

namespace lip {

// Edge-list text format:
//
//   n m
//   u v        (m lines, 0 <= u < v < n)
//
// Whitespace separated, LF line endings. A graph pair is two such blocks,
// G first, separated by a line containing only "---". Readers accept u > v
// and repeated pairs (they are normalised); writers always emit the canonical
// sorted u < v form, so write(read(write(g))) is byte-identical.

/// Throws ParseError carrying the 1-based line number.
Graph parse_edge_list(std::string_view text);

/// With `allow_single`, input without a separator yields the pair (G, G).
GraphPair parse_pair(std::string_view text, bool allow_single = true);

std::string format_edge_list(const Graph& g);
std::string format_pair(const GraphPair& pair);

}  // namespace lip
