#pragma once

// Brute-force reference implementations. These exist to be slow and
// obviously correct; every pipeline contract is checked against them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cyclescrub/graph.hpp"

namespace cyclescrub {

using Cycle = std::vector<Vertex>;
/// Sorted, duplicate-free list of canonical cycles.
using CycleList = std::vector<Cycle>;
/// One flag per entry of Graph::edges(). uint8_t rather than bool so that
/// parallel writers touch distinct bytes.
using EdgeFlags = std::vector<std::uint8_t>;

inline constexpr int kMinCycleLength = 3;
inline constexpr int kMaxCycleLength = 8;

/// Rotates the smallest vertex to the front and picks the direction whose
/// second element is smaller.
Cycle canonical_cycle(std::span<const Vertex> cycle);

CycleList enumerate_triangles(const Graph& g);
std::uint64_t count_triangles(const Graph& g);

/// Per-edge triangle membership via sorted-neighborhood intersection.
EdgeFlags all_edge_triangle(const Graph& g);
EdgeFlags all_edge_triangle_serial(const Graph& g);

/// All simple k-cycles, 3 <= k <= 8. Throws std::out_of_range otherwise.
CycleList enumerate_k_cycles(const Graph& g, int k);
std::uint64_t count_k_cycles(const Graph& g, int k);
std::uint64_t count_k_cycles_serial(const Graph& g, int k);

/// Shortest cycle length; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

struct ZeroTriangleWitness {
  Vertex a = 0, b = 0, c = 0;
};

/// Exhaustive search over A x B x C for a triangle of total weight zero.
std::optional<ZeroTriangleWitness> zero_triangle_brute(const WeightedTripartiteGraph& wg);

/// Triangle detection split at degree m^(1/3 - delta): triangles through a
/// low-degree vertex by neighborhood scan, the rest by squaring the
/// adjacency matrix of the high-degree induced subgraph.
bool triangle_detect_degree_split(const Graph& g, double delta);

}  // namespace cyclescrub
