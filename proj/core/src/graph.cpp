#include "rwnet/graph.hpp"

#include <algorithm>
#include <string>

#include "rwnet/error.hpp"

namespace rwnet {

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {}

Graph Graph::cycle(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
  }
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
    }
  }
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
  }
  return g;
}

Graph Graph::star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) {
    g.add_edge(0, static_cast<NodeId>(i));
  }
  return g;
}

NodeId Graph::add_node() {
  adjacency_.emplace_back();
  return static_cast<NodeId>(adjacency_.size() - 1);
}

void Graph::check_node(NodeId v) const {
  if (!contains(v)) {
    throw InputError("node id " + std::to_string(v) + " out of range (node count " +
                     std::to_string(node_count()) + ")");
  }
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (!contains(u) || !contains(v)) {
    return false;
  }
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const NodeId other = &a == &adjacency_[u] ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

bool Graph::add_edge(NodeId u, NodeId v) {
  check_node(u);
  check_node(v);
  if (u == v || has_edge(u, v)) {
    return false;
  }
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++edge_count_;
  return true;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  std::vector<NodeId> upper;
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    upper.clear();
    for (NodeId v : adjacency_[u]) {
      if (u < v) upper.push_back(v);
    }
    std::sort(upper.begin(), upper.end());
    for (NodeId v : upper) out.emplace_back(u, v);
  }
  return out;
}

double average_degree(const Graph& g) {
  if (g.node_count() == 0) {
    throw InputError("average degree of an empty graph");
  }
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

BfsWorkspace::BfsWorkspace(std::size_t node_count)
    : stamp_(node_count, 0), dist_(node_count, 0) {
  order_.reserve(node_count);
}

void BfsWorkspace::run(const Graph& g, NodeId source, std::optional<std::uint32_t> depth_limit) {
  if (!g.contains(source)) {
    throw InputError("BFS source " + std::to_string(source) + " out of range");
  }
  if (stamp_.size() < g.node_count()) {
    stamp_.resize(g.node_count(), 0);
    dist_.resize(g.node_count(), 0);
  }
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  const std::uint32_t limit = depth_limit.value_or(kUnreached);

  order_.clear();
  ring_begin_.clear();
  order_.push_back(source);
  stamp_[source] = epoch_;
  dist_[source] = 0;
  ring_begin_.push_back(0);

  std::size_t head = 0;
  std::uint32_t depth = 0;
  while (head < order_.size()) {
    const std::size_t ring_end = order_.size();
    if (depth == limit) {
      break;
    }
    for (; head < ring_end; ++head) {
      for (NodeId w : g.neighbors(order_[head])) {
        if (stamp_[w] != epoch_) {
          stamp_[w] = epoch_;
          dist_[w] = depth + 1;
          order_.push_back(w);
        }
      }
    }
    if (order_.size() == ring_end) {
      break;
    }
    ++depth;
    ring_begin_.push_back(ring_end);
  }
  ring_begin_.push_back(order_.size());
}

std::span<const NodeId> BfsWorkspace::ring(std::uint32_t d) const {
  if (d > max_depth()) {
    return {};
  }
  return std::span<const NodeId>(order_).subspan(ring_begin_[d], ring_begin_[d + 1] - ring_begin_[d]);
}

std::uint32_t BfsWorkspace::distance(NodeId v) const {
  if (v >= stamp_.size() || stamp_[v] != epoch_) {
    return kUnreached;
  }
  return dist_[v];
}

std::uint64_t BfsWorkspace::distance_sum() const {
  std::uint64_t sum = 0;
  for (std::uint32_t d = 1; d <= max_depth(); ++d) {
    sum += static_cast<std::uint64_t>(d) * (ring_begin_[d + 1] - ring_begin_[d]);
  }
  return sum;
}

std::unordered_map<NodeId, std::uint32_t> bfs_distances(const Graph& g, NodeId source,
                                                        std::optional<std::uint32_t> depth_limit) {
  BfsWorkspace bfs(g.node_count());
  bfs.run(g, source, depth_limit);
  std::unordered_map<NodeId, std::uint32_t> out;
  out.reserve(bfs.order().size());
  for (NodeId v : bfs.order()) {
    out.emplace(v, bfs.distance(v));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.node_count() == 0) {
    return true;
  }
  BfsWorkspace bfs(g.node_count());
  bfs.run(g, 0);
  return bfs.order().size() == g.node_count();
}

}  // namespace rwnet
