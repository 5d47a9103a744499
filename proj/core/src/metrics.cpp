#include "rwnet/metrics.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "rwnet/error.hpp"

namespace rwnet {
namespace {

void require_nonempty(const Graph& g, const char* what) {
  if (g.node_count() == 0) {
    throw InputError(std::string(what) + " of an empty graph");
  }
}

// links[v] = number of edges among the neighbors of v.
std::vector<std::uint64_t> neighbor_links(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::uint64_t> links(n, 0);
  std::vector<NodeId> mark(n, std::numeric_limits<NodeId>::max());
  for (NodeId v = 0; v < n; ++v) {
    if (g.degree(v) < 2) continue;
    for (NodeId u : g.neighbors(v)) mark[u] = v;
    std::uint64_t hits = 0;
    for (NodeId u : g.neighbors(v)) {
      for (NodeId w : g.neighbors(u)) {
        hits += mark[w] == v;
      }
    }
    links[v] = hits / 2;
  }
  return links;
}

std::uint64_t pairs(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

struct PathTotals {
  std::uint64_t distance_sum = 0;
  std::uint64_t unreachable = 0;
};

// Breadth-first search from up to 64 sources at once: bit i of a node's
// word tracks source i, and every level is one sweep over the adjacency.
PathTotals batch_totals(const Graph& g, std::span<const NodeId> sources,
                        std::vector<std::uint64_t>& visited, std::vector<std::uint64_t>& frontier,
                        std::vector<std::uint64_t>& next) {
  const std::size_t n = g.node_count();
  const std::uint64_t full = sources.size() == 64 ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << sources.size()) - 1;
  std::fill(visited.begin(), visited.end(), 0);
  std::fill(frontier.begin(), frontier.end(), 0);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    visited[sources[i]] |= std::uint64_t{1} << i;
    frontier[sources[i]] |= std::uint64_t{1} << i;
  }

  PathTotals totals;
  for (std::uint64_t level = 1;; ++level) {
    bool advanced = false;
    for (NodeId v = 0; v < n; ++v) {
      std::uint64_t reach = 0;
      if (visited[v] != full) {
        for (NodeId u : g.neighbors(v)) reach |= frontier[u];
        reach &= ~visited[v];
      }
      next[v] = reach;
      if (reach != 0) {
        advanced = true;
        totals.distance_sum += level * static_cast<std::uint64_t>(std::popcount(reach));
      }
    }
    if (!advanced) break;
    for (NodeId v = 0; v < n; ++v) visited[v] |= next[v];
    frontier.swap(next);
  }
  for (NodeId v = 0; v < n; ++v) {
    totals.unreachable += static_cast<std::uint64_t>(std::popcount(full & ~visited[v]));
  }
  return totals;
}

PathTotals bfs_totals(const Graph& g, std::span<const NodeId> sources, unsigned threads) {
  constexpr std::size_t kBatch = 64;
  const std::size_t batches = (sources.size() + kBatch - 1) / kBatch;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, batches)));

  std::vector<PathTotals> partial(threads);
  auto work = [&](unsigned t) {
    const std::size_t n = g.node_count();
    std::vector<std::uint64_t> visited(n), frontier(n), next(n);
    for (std::size_t b = t; b < batches; b += threads) {
      const auto batch = sources.subspan(b * kBatch, std::min(kBatch, sources.size() - b * kBatch));
      const PathTotals part = batch_totals(g, batch, visited, frontier, next);
      partial[t].distance_sum += part.distance_sum;
      partial[t].unreachable += part.unreachable;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  PathTotals total;
  for (const auto& p : partial) {
    total.distance_sum += p.distance_sum;
    total.unreachable += p.unreachable;
  }
  return total;
}

}  // namespace

double local_clustering(const Graph& g, NodeId v) {
  if (!g.contains(v)) {
    throw InputError("node id " + std::to_string(v) + " out of range");
  }
  const auto nbrs = g.neighbors(v);
  const std::size_t k = nbrs.size();
  if (k < 2) return 0.0;
  std::vector<NodeId> sorted(nbrs.begin(), nbrs.end());
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t hits = 0;
  for (NodeId u : nbrs) {
    for (NodeId w : g.neighbors(u)) {
      hits += std::binary_search(sorted.begin(), sorted.end(), w);
    }
  }
  return static_cast<double>(hits) / static_cast<double>(k * (k - 1));
}

double average_local_clustering(const Graph& g) {
  require_nonempty(g, "average local clustering");
  const auto links = neighbor_links(g);
  double sum = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::uint64_t p = pairs(g.degree(v));
    if (p > 0) sum += static_cast<double>(links[v]) / static_cast<double>(p);
  }
  return sum / static_cast<double>(g.node_count());
}

std::uint64_t triangle_count(const Graph& g) {
  const auto links = neighbor_links(g);
  return std::accumulate(links.begin(), links.end(), std::uint64_t{0}) / 3;
}

double transitivity(const Graph& g) {
  require_nonempty(g, "transitivity");
  const auto links = neighbor_links(g);
  std::uint64_t closed = 0;
  std::uint64_t triples = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    closed += links[v];
    triples += pairs(g.degree(v));
  }
  // Each triangle closes three triples, one per corner.
  return triples == 0 ? 0.0 : static_cast<double>(closed) / static_cast<double>(triples);
}

AsplMode AsplMode::parse(std::string_view text, RngSeed seed) {
  if (text == "exact") return exact();
  constexpr std::string_view prefix = "sampled:";
  if (text.starts_with(prefix)) {
    const auto arg = text.substr(prefix.size());
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
    if (!arg.empty() && ec == std::errc{} && ptr == arg.data() + arg.size() && k > 0) {
      return sampled(k, seed);
    }
  }
  throw InputError("ASPL mode must be 'exact' or 'sampled:<k>' with k >= 1, got '" +
                   std::string(text) + "'");
}

std::string AsplMode::to_string() const {
  return kind == Kind::exact ? "exact" : "sampled:" + std::to_string(sources);
}

AsplMode default_aspl_mode(std::size_t node_count, RngSeed seed) {
  if (node_count <= kExactAsplNodeLimit) return AsplMode::exact();
  return AsplMode::sampled(kDefaultAsplSources, seed);
}

double average_shortest_path(const Graph& g, const AsplMode& mode, unsigned threads) {
  const std::size_t n = g.node_count();
  if (n < 2) {
    throw InputError("average shortest path needs at least 2 nodes");
  }
  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), NodeId{0});

  std::vector<NodeId> sources;
  if (mode.kind == AsplMode::Kind::exact || mode.sources >= n) {
    sources = std::move(all);
  } else {
    if (mode.sources == 0) throw InputError("sampled ASPL needs at least one source");
    RandomEngine rng = make_engine(mode.seed);
    sources.reserve(mode.sources);
    std::sample(all.begin(), all.end(), std::back_inserter(sources), mode.sources, rng);
  }

  const PathTotals totals = bfs_totals(g, sources, threads);
  if (totals.unreachable > 0) {
    const bool all_sources = sources.size() == n;
    const std::uint64_t count = all_sources ? totals.unreachable / 2 : totals.unreachable;
    throw InputError("graph is disconnected: " + std::to_string(count) + " unreachable " +
                     (all_sources ? "node pairs" : "(source, node) pairs"));
  }
  const double denom = static_cast<double>(sources.size()) * static_cast<double>(n - 1);
  return static_cast<double>(totals.distance_sum) / denom;
}

DegreeHistogram DegreeHistogram::of(const Graph& g) {
  std::map<std::size_t, std::size_t> counts;
  for (NodeId v = 0; v < g.node_count(); ++v) ++counts[g.degree(v)];
  return from_counts(counts);
}

DegreeHistogram DegreeHistogram::from_counts(const std::map<std::size_t, std::size_t>& counts) {
  DegreeHistogram h;
  for (auto [k, c] : counts) h.node_count_ += c;
  for (auto [k, c] : counts) {
    if (k == 0 || c == 0) continue;
    h.entries_.push_back(
        {k, c, static_cast<double>(c) / static_cast<double>(h.node_count_)});
  }
  return h;
}

double fit_power_law(const DegreeHistogram& hist) {
  const auto& e = hist.entries();
  if (e.size() < 2) {
    throw InputError("power-law fit needs at least two distinct degrees, got " +
                     std::to_string(e.size()));
  }
  double mx = 0.0;
  double my = 0.0;
  for (const auto& p : e) {
    mx += std::log(static_cast<double>(p.degree));
    my += std::log(p.probability);
  }
  mx /= static_cast<double>(e.size());
  my /= static_cast<double>(e.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& p : e) {
    const double dx = std::log(static_cast<double>(p.degree)) - mx;
    sxy += dx * (std::log(p.probability) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

NetworkMetrics measure(const Graph& g, const AsplMode& aspl_mode, unsigned threads) {
  if (g.node_count() < 3) {
    throw InputError("measure needs at least 3 nodes, got " + std::to_string(g.node_count()));
  }
  NetworkMetrics m;
  m.node_count = g.node_count();
  m.edge_count = g.edge_count();
  m.aspl_mode = aspl_mode;
  m.avg_shortest_path = average_shortest_path(g, aspl_mode, threads);

  const auto links = neighbor_links(g);
  double local_sum = 0.0;
  std::uint64_t closed = 0;
  std::uint64_t triples = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::uint64_t p = pairs(g.degree(v));
    if (p > 0) local_sum += static_cast<double>(links[v]) / static_cast<double>(p);
    closed += links[v];
    triples += p;
  }
  m.avg_local_clustering = local_sum / static_cast<double>(g.node_count());
  m.transitivity = triples == 0 ? 0.0 : static_cast<double>(closed) / static_cast<double>(triples);

  const auto hist = DegreeHistogram::of(g);
  m.max_degree = hist.max_degree();
  m.gamma = hist.entries().size() >= 2 ? fit_power_law(hist)
                                       : std::numeric_limits<double>::quiet_NaN();
  return m;
}

}  // namespace rwnet
