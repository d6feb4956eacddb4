#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "moorelab/graph.hpp"

namespace moorelab {

// graph6: size header N(n) followed by the upper triangle of the adjacency
// matrix, column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
// into 6-bit groups with 63 added to each.

std::string encode_graph6(const Graph& g);

/// Anonymous labels, no sides. Throws MalformedGraph6.
Graph decode_graph6(std::string_view text);

/// One graph per non-empty line; a leading ">>graph6<<" header is accepted.
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);
void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs);

/// Undirected DOT; points render as circles, lines as boxes.
std::string export_dot(const Graph& g, std::string_view name = "G");

}  // namespace moorelab
