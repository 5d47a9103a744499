#include "rwnet/generator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "rwnet/edge_list.hpp"
#include "rwnet/error.hpp"

namespace rwnet {
namespace {

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw InputError("invalid " + std::string(what) + " size '" + std::string(text) + "'");
  }
  return value;
}

NodeId uniform_node(const Graph& g, RandomEngine& rng) {
  return std::uniform_int_distribution<NodeId>(0, static_cast<NodeId>(g.node_count() - 1))(rng);
}

NodeId uniform_neighbor(const Graph& g, NodeId v, RandomEngine& rng) {
  const auto nbrs = g.neighbors(v);
  if (nbrs.empty()) {
    throw InputError("random walk reached isolated node " + std::to_string(v));
  }
  return nbrs[std::uniform_int_distribution<std::size_t>(0, nbrs.size() - 1)(rng)];
}

void check_initial_graph(const Graph& g) {
  if (g.node_count() < 3) {
    throw InputError("initial graph needs at least 3 nodes, got " + std::to_string(g.node_count()));
  }
  if (!is_connected(g)) {
    throw InputError("initial graph is disconnected");
  }
}

}  // namespace

InitialGraphSpec InitialGraphSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InputError("initial graph must be cycle:<n>, complete:<n> or file:<path>, got '" +
                     std::string(text) + "'");
  }
  const auto kind = text.substr(0, colon);
  const auto arg = text.substr(colon + 1);
  if (kind == "cycle") return cycle(parse_size(arg, "cycle"));
  if (kind == "complete") return complete(parse_size(arg, "complete"));
  if (kind == "file") {
    if (arg.empty()) throw InputError("file: initial graph needs a path");
    return file(std::string(arg));
  }
  throw InputError("unknown initial graph kind '" + std::string(kind) + "'");
}

std::string InitialGraphSpec::to_string() const {
  switch (kind) {
    case Kind::cycle:
      return "cycle:" + std::to_string(size);
    case Kind::complete:
      return "complete:" + std::to_string(size);
    case Kind::file:
      return "file:" + path;
  }
  return {};
}

Graph InitialGraphSpec::build() const {
  Graph g;
  switch (kind) {
    case Kind::cycle:
      g = Graph::cycle(size);
      break;
    case Kind::complete:
      g = Graph::complete(size);
      break;
    case Kind::file:
      g = load_edge_list(path);
      break;
  }
  check_initial_graph(g);
  return g;
}

void GenParams::validate() const {
  if (nodes_to_add < 1) throw InputError("N must be at least 1");
  if (marks_per_step < 1) throw InputError("m must be at least 1");
  if (!(p1 >= 0.0 && p1 <= 1.0)) {
    throw InputError("p1 must lie in [0, 1], got " + std::to_string(p1));
  }
  if (!(beta > 1.0) || !std::isfinite(beta)) {
    throw InputError("beta must be greater than 1, got " + std::to_string(beta));
  }
  if (!(degree_epsilon >= 0.0)) throw InputError("degree epsilon must be non-negative");
  if ((initial.kind == InitialGraphSpec::Kind::cycle ||
       initial.kind == InitialGraphSpec::Kind::complete) &&
      initial.size < 3) {
    throw InputError("initial graph needs at least 3 nodes");
  }
}

std::vector<NodeId> run_random_walk(const Graph& g, NodeId start, double p1, std::size_t m,
                                    RandomEngine& rng) {
  if (!g.contains(start)) {
    throw InputError("walk start " + std::to_string(start) + " out of range");
  }
  if (m < 1) throw InputError("m must be at least 1");

  std::vector<NodeId> marked{start};
  NodeId current = start;
  for (std::size_t phase = 1; phase < m; ++phase) {
    const int steps = sample_step_length(p1, rng);
    for (int s = 0; s < steps; ++s) {
      current = uniform_neighbor(g, current, rng);
    }
    if (std::find(marked.begin(), marked.end(), current) == marked.end()) {
      marked.push_back(current);
    }
  }
  return marked;
}

std::optional<NodeId> find_node_at_distance(const Graph& g, NodeId source, std::uint32_t distance,
                                            RandomEngine& rng, BfsWorkspace& bfs) {
  bfs.run(g, source, distance);
  const std::uint32_t reached = std::min(distance, bfs.max_depth());
  if (reached < DistanceDistribution::kMinDistance) {
    return std::nullopt;
  }
  const auto ring = bfs.ring(reached);
  return ring[std::uniform_int_distribution<std::size_t>(0, ring.size() - 1)(rng)];
}

std::optional<ShortcutEdge> add_shortcut_edge(Graph& g, const DistanceDistribution& dist,
                                              RandomEngine& rng, BfsWorkspace& bfs,
                                              std::uint32_t* sampled_distance) {
  const std::uint32_t d = dist.sample(rng);
  if (sampled_distance != nullptr) *sampled_distance = d;
  const NodeId s = uniform_node(g, rng);
  const auto t = find_node_at_distance(g, s, d, rng, bfs);
  if (!t) {
    return std::nullopt;
  }
  g.add_edge(s, *t);
  return ShortcutEdge{s, *t};
}

void grow(Graph& g, const GenParams& params, const IterationObserver& observer) {
  params.validate();
  check_initial_graph(g);

  RandomEngine rng = make_engine(params.seed);
  BfsWorkspace bfs(g.node_count() + params.nodes_to_add);
  IterationEvent event;

  for (std::size_t i = 0; i < params.nodes_to_add; ++i) {
    const NodeId start = uniform_node(g, rng);
    auto marked = run_random_walk(g, start, params.p1, params.marks_per_step, rng);

    const NodeId v = g.add_node();
    for (NodeId u : marked) {
      g.add_edge(v, u);
    }

    std::optional<ShortcutEdge> shortcut;
    std::uint32_t max_distance = 0;
    std::uint32_t sampled = 0;
    bool fallback = false;
    if (params.special_edges) {
      fallback = diameter_uses_fallback(g.node_count(), g.edge_count(), params.degree_epsilon);
      const auto dist = build_distance_distribution(g, params.beta, params.degree_epsilon);
      max_distance = dist.max_distance();
      shortcut = add_shortcut_edge(g, dist, rng, bfs, &sampled);
    }

    if (observer) {
      event.iteration = i;
      event.walk_start = start;
      event.marked = std::move(marked);
      event.new_node = v;
      event.max_distance = max_distance;
      event.diameter_fallback = fallback;
      event.sampled_distance = sampled;
      event.shortcut = shortcut;
      observer(event);
    }
  }
}

Graph generate(const GenParams& params, const IterationObserver& observer) {
  params.validate();
  Graph g = params.initial.build();
  grow(g, params, observer);
  return g;
}

}  // namespace rwnet
