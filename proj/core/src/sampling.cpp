#include "rwnet/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rwnet/error.hpp"

namespace rwnet {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int sample_step_length(double p1, RandomEngine& rng) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) {
    throw InputError("p1 must lie in [0, 1], got " + std::to_string(p1));
  }
  return std::bernoulli_distribution(p1)(rng) ? 1 : 2;
}

bool diameter_uses_fallback(std::size_t node_count, std::size_t edge_count, double epsilon) {
  if (node_count == 0) {
    throw InputError("diameter estimate needs at least one node");
  }
  const double deg = 2.0 * static_cast<double>(edge_count) / static_cast<double>(node_count);
  return !(deg > 2.0 + epsilon);
}

double estimate_diameter(std::size_t node_count, std::size_t edge_count, double epsilon) {
  if (diameter_uses_fallback(node_count, edge_count, epsilon)) {
    return static_cast<double>(node_count) - 1.0;
  }
  const double n = static_cast<double>(node_count);
  const double deg = 2.0 * static_cast<double>(edge_count) / n;
  return 2.0 * std::log(n * (deg - 2.0) + 1.0) / std::log(deg - 1.0);
}

DistanceDistribution::DistanceDistribution(std::uint32_t max_distance, double exponent)
    : max_distance_(max_distance), exponent_(exponent) {
  if (max_distance < kMinDistance) {
    throw InputError("distance distribution needs max distance >= 2, got " +
                     std::to_string(max_distance));
  }
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw InputError("distance exponent must be positive, got " + std::to_string(exponent));
  }
  const std::size_t size = max_distance - kMinDistance + 1;
  std::vector<double> weights(size);
  for (std::size_t i = 0; i < size; ++i) {
    weights[i] = std::pow(static_cast<double>(i + kMinDistance), -exponent);
  }
  // Smallest terms first.
  double total = 0.0;
  for (auto it = weights.rbegin(); it != weights.rend(); ++it) total += *it;
  normalizer_ = 1.0 / total;

  probabilities_.resize(size);
  cumulative_.resize(size);
  double running = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    probabilities_[i] = normalizer_ * weights[i];
    running += probabilities_[i];
    cumulative_[i] = running;
  }
  cumulative_.back() = 1.0;
}

double DistanceDistribution::probability(std::uint32_t d) const {
  if (d < kMinDistance || d > max_distance_) return 0.0;
  return probabilities_[d - kMinDistance];
}

std::uint32_t DistanceDistribution::sample(RandomEngine& rng) const {
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const auto index = std::min<std::size_t>(it - cumulative_.begin(), cumulative_.size() - 1);
  return static_cast<std::uint32_t>(index) + kMinDistance;
}

std::uint32_t estimated_max_distance(const Graph& g, double epsilon) {
  if (g.node_count() < 3) {
    throw InputError("shortcut distances need a graph with at least 3 nodes, got " +
                     std::to_string(g.node_count()));
  }
  const double estimate = estimate_diameter(g.node_count(), g.edge_count(), epsilon);
  const double upper = static_cast<double>(g.node_count() - 1);
  const double clamped = std::clamp(std::floor(estimate), 2.0, upper);
  return static_cast<std::uint32_t>(clamped);
}

DistanceDistribution build_distance_distribution(const Graph& g, double exponent, double epsilon) {
  return DistanceDistribution(estimated_max_distance(g, epsilon), exponent);
}

}  // namespace rwnet
