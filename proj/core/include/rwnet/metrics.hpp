#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rwnet/graph.hpp"
#include "rwnet/sampling.hpp"

namespace rwnet {

/// Local clustering of v; 0 when deg(v) <= 1.
double local_clustering(const Graph& g, NodeId v);

/// Mean local clustering over all nodes (C-bar).
double average_local_clustering(const Graph& g);

/// 3 * triangles / connected triples; 0 when there are no triples.
double transitivity(const Graph& g);

std::uint64_t triangle_count(const Graph& g);

/// How the average shortest path length is computed.
struct AsplMode {
  enum class Kind { exact, sampled };

  Kind kind = Kind::exact;
  std::size_t sources = 0;
  RngSeed seed{};

  static AsplMode exact() { return {}; }
  static AsplMode sampled(std::size_t sources, RngSeed seed = {}) {
    return {Kind::sampled, sources, seed};
  }

  /// `exact` or `sampled:<k>`.
  static AsplMode parse(std::string_view text, RngSeed seed = {});
  std::string to_string() const;
};

inline constexpr std::size_t kExactAsplNodeLimit = 20000;
inline constexpr std::size_t kDefaultAsplSources = 1000;

/// Exact up to kExactAsplNodeLimit nodes, sampled with 1000 sources above.
AsplMode default_aspl_mode(std::size_t node_count, RngSeed seed = {});

/// Mean hop distance over node pairs. Exact mode runs BFS from every node;
/// sampled mode from `sources` distinct uniform nodes. Throws InputError for
/// a disconnected graph, reporting the unreachable pair count. `threads` = 0
/// uses the hardware concurrency; the result does not depend on it.
double average_shortest_path(const Graph& g, const AsplMode& mode, unsigned threads = 0);

/// Degree counts over all nodes; degree 0 is tracked but never fitted.
class DegreeHistogram {
 public:
  static DegreeHistogram of(const Graph& g);
  /// `counts` maps degree to node count. Degree 0 only adds to node_count().
  static DegreeHistogram from_counts(const std::map<std::size_t, std::size_t>& counts);

  struct Entry {
    std::size_t degree;
    std::size_t count;
    double probability;
  };

  /// Nonzero-count degrees k >= 1 in increasing k.
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t node_count() const { return node_count_; }
  std::size_t max_degree() const { return entries_.empty() ? 0 : entries_.back().degree; }

 private:
  std::vector<Entry> entries_;
  std::size_t node_count_ = 0;
};

/// Least squares slope of ln P(k) against ln k (negative for long tails).
/// Throws InputError with fewer than two points.
double fit_power_law(const DegreeHistogram& hist);

struct NetworkMetrics {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double avg_local_clustering = 0.0;
  double transitivity = 0.0;
  double avg_shortest_path = 0.0;
  /// NaN when every node has the same degree (no slope to fit).
  double gamma = 0.0;
  std::size_t max_degree = 0;
  AsplMode aspl_mode;
};

/// All measures at once. Requires a connected graph with >= 3 nodes.
NetworkMetrics measure(const Graph& g, const AsplMode& aspl_mode, unsigned threads = 0);

}  // namespace rwnet
