#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace rwnet {

using NodeId = std::uint32_t;

/// Undirected simple graph stored as per-node neighbor vectors.
///
/// Nodes are dense ids 0..node_count()-1 and can only be appended. Neighbor
/// lists are indexable so a uniformly random neighbor is one array access.
/// Duplicate edges and self-loops are rejected by add_edge().
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count);

  static Graph cycle(std::size_t n);
  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  /// Node 0 is the hub, 1..leaves are leaves.
  static Graph star(std::size_t leaves);

  NodeId add_node();

  /// Inserts {u, v}. Returns false, leaving the graph untouched, for a
  /// self-loop or an edge that already exists. Throws InputError if either
  /// id is out of range.
  bool add_edge(NodeId u, NodeId v);

  bool has_edge(NodeId u, NodeId v) const;

  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool contains(NodeId v) const { return v < adjacency_.size(); }

  /// Each edge once as (u, v) with u < v, ordered by u then v.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_node(NodeId v) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// 2|E| / |V|. Throws InputError for an empty graph.
double average_degree(const Graph& g);

/// Reusable breadth-first search state.
///
/// Visited marks are epoch stamps, so repeated searches on a large graph do
/// not pay for clearing per-node arrays. One workspace per thread.
class BfsWorkspace {
 public:
  static constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

  BfsWorkspace() = default;
  explicit BfsWorkspace(std::size_t node_count);

  /// Explores from `source`, stopping after the ring at `depth_limit` when
  /// one is given.
  void run(const Graph& g, NodeId source, std::optional<std::uint32_t> depth_limit = std::nullopt);

  /// Visited nodes in nondecreasing distance order.
  std::span<const NodeId> order() const { return order_; }
  /// Nodes at exactly distance d (empty when d > max_depth()).
  std::span<const NodeId> ring(std::uint32_t d) const;
  /// Largest distance reached by the last run.
  std::uint32_t max_depth() const { return static_cast<std::uint32_t>(ring_begin_.size()) - 2; }
  std::uint32_t distance(NodeId v) const;
  /// Sum of distances from the source to every visited node.
  std::uint64_t distance_sum() const;

 private:
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> dist_;
  std::vector<NodeId> order_;
  // ring d occupies order_[ring_begin_[d], ring_begin_[d + 1]).
  std::vector<std::size_t> ring_begin_;
  std::uint32_t epoch_ = 0;
};

/// Hop distances from `source` to every reachable node, optionally bounded.
std::unordered_map<NodeId, std::uint32_t> bfs_distances(
    const Graph& g, NodeId source, std::optional<std::uint32_t> depth_limit = std::nullopt);

/// True when every node is reachable from node 0 (an empty graph counts).
bool is_connected(const Graph& g);

}  // namespace rwnet
