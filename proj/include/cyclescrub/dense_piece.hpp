#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cyclescrub/graph.hpp"
#include "cyclescrub/params.hpp"
#include "cyclescrub/rng.hpp"

namespace cyclescrub {

/// Edges {x, y} of g with x in X, y in Y, x != y, as unordered pairs.
/// X and Y must be sorted; they may overlap.
std::vector<Edge> crossing_edges(const Graph& g, std::span<const Vertex> X,
                                 std::span<const Vertex> Y);

/// Sampled test for "X x Y carries many edges": draws pair_samples ordered
/// pairs and accepts when at least hit_threshold are edges. With
/// exact_fallback set and pair_samples >= |X||Y| it instead compares the
/// exact crossing-edge count against density_floor.
bool estimate_density(const Graph& g, std::span<const Vertex> X, std::span<const Vertex> Y,
                      const DensePieceParams& params, Rng& rng);

/// One random walk of `length` vertices from a uniform start. Returns the
/// walk only if it is a simple path.
std::optional<std::vector<Vertex>> sample_path(const Graph& g, std::size_t length, Rng& rng);

struct DensePiece {
  Vertex u = 0;
  Vertex w = 0;
  std::vector<Vertex> x_side;  // N(u) \ {w}
  std::vector<Vertex> y_side;  // N(w) \ {u}
  std::vector<Vertex> piece;   // union of the two sides
  std::vector<Edge> crossing;  // crossing_edges(g, x_side, y_side)
};

/// The sides used for a sampled path with endpoints u, w.
DensePiece make_piece(const Graph& g, Vertex u, Vertex w);

/// Samples params.path_samples paths of k-2 vertices and returns the first
/// whose endpoint neighborhoods pass estimate_density. Throws GraphError if
/// the max degree exceeds params.degree_bound.
std::optional<DensePiece> find_dense_piece(const Graph& g, const DensePieceParams& params, Rng& rng);

/// Edges of g lying in a triangle that contains at least one edge of X x Y.
/// Sorted, duplicate-free.
std::vector<Edge> check_triangle_piece(const Graph& g, std::span<const Vertex> X,
                                       std::span<const Vertex> Y, const DensePieceParams& params);

struct DenseRemoval {
  std::vector<Edge> reported;  // sorted; each lies in a triangle of the input
  std::vector<Edge> removed;   // sorted
  Graph scrubbed;              // input minus removed
  std::size_t pieces = 0;
  std::size_t probes = 0;      // samples drawn over all iterations
  bool cap_reached = false;
};

/// Repeatedly finds a dense piece, reports the triangle edges through its
/// crossing edges, and deletes those crossing edges. For every input edge e:
/// e lies in a triangle of g  <=>  e in reported  or  e lies in a triangle
/// of scrubbed.
DenseRemoval remove_dense_pieces(const Graph& g, const DensePieceParams& params, std::uint64_t seed);

/// Same loop with pieces (N(v), N(v)) for sampled vertices v.
DenseRemoval reduce_triangle_count(const Graph& g, const DensePieceParams& params, std::uint64_t seed);

}  // namespace cyclescrub
