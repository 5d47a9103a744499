#include "rwnet/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "rwnet/error.hpp"

namespace rwnet {
namespace {

bool parse_id(std::string_view token, NodeId& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  NodeId max_id = 0;
  bool any = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    NodeId u = 0;
    NodeId v = 0;
    if (tokens.size() != 2 || !parse_id(tokens[0], u) || !parse_id(tokens[1], v)) {
      throw InputError("edge list line " + std::to_string(line_no) +
                       ": expected two non-negative integer node ids, got '" + line + "'");
    }
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
    any = true;
  }
  Graph g(any ? static_cast<std::size_t>(max_id) + 1 : 0);
  for (auto [u, v] : edges) {
    g.add_edge(u, v);
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open edge list '" + path.string() + "'");
  }
  return read_edge_list(in);
}

void save_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  write_edge_list(out, g);
  out.flush();
  if (!out) {
    throw IoError("failed writing '" + path.string() + "'");
  }
}

}  // namespace rwnet
