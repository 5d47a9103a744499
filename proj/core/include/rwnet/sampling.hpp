#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "rwnet/graph.hpp"

namespace rwnet {

struct RngSeed {
  std::uint64_t value = 0;
  friend bool operator==(RngSeed, RngSeed) = default;
};

/// One seedable stream per generation run; a given seed reproduces the same
/// draw sequence within this build.
using RandomEngine = std::mt19937_64;

inline RandomEngine make_engine(RngSeed seed) { return RandomEngine{seed.value}; }

/// splitmix64 finalizer; used to derive independent seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt);

/// Walk phase length: 1 with probability p1, otherwise 2.
int sample_step_length(double p1, RandomEngine& rng);

/// Average degree below 2 + epsilon makes the log base degenerate.
inline constexpr double kDefaultDegreeEpsilon = 0.05;
inline constexpr double kDefaultDistanceExponent = 2.0;

/// Branching-process diameter estimate 2 * log_{deg-1}(|V| (deg-2) + 1),
/// with deg = 2|E|/|V|. Returns node_count - 1 when deg <= 2 + epsilon.
double estimate_diameter(std::size_t node_count, std::size_t edge_count,
                         double epsilon = kDefaultDegreeEpsilon);

/// True when estimate_diameter() would take the degenerate fallback branch.
bool diameter_uses_fallback(std::size_t node_count, std::size_t edge_count,
                            double epsilon = kDefaultDegreeEpsilon);

/// Shortcut distance law P(d) = A / d^exponent on d = 2..max_distance().
class DistanceDistribution {
 public:
  static constexpr std::uint32_t kMinDistance = 2;

  /// Throws InputError if max_distance < 2 or exponent <= 0.
  DistanceDistribution(std::uint32_t max_distance, double exponent = kDefaultDistanceExponent);

  std::uint32_t min_distance() const { return kMinDistance; }
  std::uint32_t max_distance() const { return max_distance_; }
  double exponent() const { return exponent_; }
  /// The normalizer A.
  double normalizer() const { return normalizer_; }

  /// Entry i is P(i + 2).
  std::span<const double> probabilities() const { return probabilities_; }
  /// P(d); zero outside the support.
  double probability(std::uint32_t d) const;

  std::uint32_t sample(RandomEngine& rng) const;

 private:
  std::uint32_t max_distance_;
  double exponent_;
  double normalizer_ = 0.0;
  std::vector<double> probabilities_;
  std::vector<double> cumulative_;
};

/// Floor of the diameter estimate for g, clamped to [2, node_count - 1].
/// Throws InputError for fewer than 3 nodes.
std::uint32_t estimated_max_distance(const Graph& g, double epsilon = kDefaultDegreeEpsilon);

DistanceDistribution build_distance_distribution(const Graph& g,
                                                 double exponent = kDefaultDistanceExponent,
                                                 double epsilon = kDefaultDegreeEpsilon);

}  // namespace rwnet
