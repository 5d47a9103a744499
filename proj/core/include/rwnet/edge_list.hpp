#pragma once

#include <filesystem>
#include <iosfwd>

#include "rwnet/graph.hpp"

namespace rwnet {

// Edge-list text format: one edge per line as two whitespace-separated
// decimal node ids, no header. Lines starting with '#' and blank lines are
// skipped. The node count is the largest id plus one.

Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

Graph load_edge_list(const std::filesystem::path& path);
void save_edge_list(const std::filesystem::path& path, const Graph& g);

}  // namespace rwnet
