#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "cyclescrub/graph.hpp"

namespace cyclescrub {

/// Random simple graph with max degree <= d. Samples candidate pairs and
/// rejects those that would exceed d at an endpoint until `edge_budget`
/// edges (default floor(n*d/4)) exist or 20*budget attempts were made.
/// Throws std::invalid_argument if d > n-1.
Graph gen_random_bounded(std::size_t n, std::size_t d, std::uint64_t seed,
                         std::optional<std::size_t> edge_budget = std::nullopt);

/// Same rejection sampling restricted to cross-part pairs. Parts are
/// contiguous blocks of sizes ceil(n/3), round(n/3), floor(n/3).
TripartiteGraph gen_random_tripartite(std::size_t n, std::size_t d, std::uint64_t seed,
                                      std::optional<std::size_t> edge_budget = std::nullopt);

struct PlantedInstance {
  TripartiteGraph graph;
  std::array<Vertex, 3> triangle{};  // (a, b, c) one per part
  Edge planted_edge;                 // the B-C edge of the planted triangle
};

/// Random bounded-degree tripartite graph containing a planted triangle.
/// Requires n >= 3 and d >= 2.
PlantedInstance gen_planted_triangle(std::size_t n, std::size_t d, std::uint64_t seed);

/// Tripartite graph with parts of the given sizes, each cross pair present
/// with probability `density`, weights uniform in [-bound, bound].
WeightedTripartiteGraph gen_weighted_tripartite(std::size_t size_a, std::size_t size_b,
                                                std::size_t size_c, double density,
                                                std::int64_t bound, std::uint64_t seed);

/// Part sizes used by the tripartite generators.
std::array<std::size_t, 3> balanced_part_sizes(std::size_t n);

}  // namespace cyclescrub
