#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "charm/graph.hpp"

namespace charm {

// graph6 record for n <= 62 (single-byte order, no long form)
CubicGraph parse_graph6(std::string_view line);
std::string write_graph6(const CubicGraph& g);

// adjacency text: first line n, then n lines "v: a b c"
CubicGraph parse_adjacency_text(std::istream& in);
std::string write_adjacency_text(const CubicGraph& g);

// one graph6 record per line, or a single adjacency-text block; auto-detected.
// Lines that are empty or start with ">>graph6<<" are skipped.
std::vector<CubicGraph> read_graph_file(const std::string& path);
std::vector<CubicGraph> read_graphs(std::istream& in);

}  // namespace charm
