#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rwnet/graph.hpp"
#include "rwnet/sampling.hpp"

namespace rwnet {

/// Where growth starts: `cycle:<n>`, `complete:<n>` or `file:<path>`.
struct InitialGraphSpec {
  enum class Kind { cycle, complete, file };

  Kind kind = Kind::cycle;
  std::size_t size = 10;
  std::string path;

  static InitialGraphSpec cycle(std::size_t n) { return {Kind::cycle, n, {}}; }
  static InitialGraphSpec complete(std::size_t n) { return {Kind::complete, n, {}}; }
  static InitialGraphSpec file(std::string p) { return {Kind::file, 0, std::move(p)}; }

  static InitialGraphSpec parse(std::string_view text);
  std::string to_string() const;

  /// Builds the graph and checks it is connected with at least 3 nodes.
  Graph build() const;

  friend bool operator==(const InitialGraphSpec&, const InitialGraphSpec&) = default;
};

struct GenParams {
  InitialGraphSpec initial = InitialGraphSpec::cycle(10);
  std::size_t nodes_to_add = 1;    // N
  std::size_t marks_per_step = 1;  // m
  double p1 = 0.5;
  /// false reproduces the Herrera-Zufiria process (no shortcut edge).
  bool special_edges = true;
  double beta = kDefaultDistanceExponent;
  double degree_epsilon = kDefaultDegreeEpsilon;
  RngSeed seed{};

  /// Throws InputError on N = 0, m = 0, p1 outside [0,1] or beta <= 1.
  void validate() const;
};

using ShortcutEdge = std::pair<NodeId, NodeId>;

/// What one growth iteration did; reported to an optional observer.
struct IterationEvent {
  std::size_t iteration = 0;
  NodeId walk_start = 0;
  std::vector<NodeId> marked;
  NodeId new_node = 0;
  /// Support bound of P(d) used for the shortcut; 0 when shortcuts are off.
  std::uint32_t max_distance = 0;
  bool diameter_fallback = false;
  std::uint32_t sampled_distance = 0;
  std::optional<ShortcutEdge> shortcut;
};

using IterationObserver = std::function<void(const IterationEvent&)>;

/// Random walk from `start` with m - 1 phases of 1 or 2 uniform neighbor
/// steps. Returns the distinct marked nodes in first-marked order; `start`
/// is always first. Revisits collapse, so the result may hold fewer than m.
std::vector<NodeId> run_random_walk(const Graph& g, NodeId start, double p1, std::size_t m,
                                    RandomEngine& rng);

/// A node at exactly `distance` hops from `source`, uniform over that ring.
/// If the ring is empty, falls back to the farthest ring at distance >= 2.
/// Returns nullopt when every node is within one hop of `source`.
std::optional<NodeId> find_node_at_distance(const Graph& g, NodeId source, std::uint32_t distance,
                                            RandomEngine& rng, BfsWorkspace& bfs);

/// Samples d from `dist`, picks a uniform source s, and links s to
/// find_node_at_distance(s, d). The new edge is never a duplicate since its
/// endpoints were at least two hops apart.
std::optional<ShortcutEdge> add_shortcut_edge(Graph& g, const DistanceDistribution& dist,
                                              RandomEngine& rng, BfsWorkspace& bfs,
                                              std::uint32_t* sampled_distance = nullptr);

/// Grows `g` in place for params.nodes_to_add iterations. `g` must be
/// connected with at least 3 nodes.
void grow(Graph& g, const GenParams& params, const IterationObserver& observer = {});

/// Builds params.initial and grows it.
Graph generate(const GenParams& params, const IterationObserver& observer = {});

}  // namespace rwnet
