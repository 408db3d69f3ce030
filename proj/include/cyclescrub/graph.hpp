#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclescrub {

using Vertex = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline std::uint64_t edge_key(Edge e) {
  return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
}

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest d with d*d <= n.
std::size_t isqrt(std::size_t n);

/// Simple undirected graph on vertices 0..n-1 with CSR adjacency.
/// Neighbor lists are sorted and duplicate-free; the edge list is sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Throws GraphError on self-loops, parallel edges and out-of-range ids.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;

  bool has_edge(Vertex a, Vertex b) const;
  /// Position of {a,b} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  /// Copy with the given edges removed; edges not present are ignored.
  Graph without(std::span<const Edge> removed) const;
  /// Subgraph induced on `keep` (sorted, distinct), relabelled 0..|keep|-1
  /// in the order given.
  Graph induced(std::span<const Vertex> keep) const;

  std::optional<std::size_t> degree_bound() const { return degree_bound_; }
  /// Attaches a declared max-degree bound; throws GraphError if violated.
  Graph with_degree_bound(std::size_t bound) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::optional<std::size_t> degree_bound_;
};

enum class Part : std::uint8_t { A = 0, B = 1, C = 2 };

char part_letter(Part p);
Part part_from_letter(char c);

/// Graph with a three-part labelling and no intra-part edges.
class TripartiteGraph {
 public:
  TripartiteGraph() = default;
  /// Throws GraphError if some edge joins two vertices of the same part.
  TripartiteGraph(Graph graph, std::vector<Part> parts);

  const Graph& graph() const { return graph_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  Part part(Vertex v) const { return parts_[v]; }
  const std::vector<Part>& parts() const { return parts_; }
  std::size_t part_size(Part p) const { return sizes_[static_cast<int>(p)]; }
  std::vector<Vertex> vertices_in(Part p) const;

  friend bool operator==(const TripartiteGraph& a, const TripartiteGraph& b) {
    return a.graph_ == b.graph_ && a.parts_ == b.parts_;
  }

 private:
  Graph graph_;
  std::vector<Part> parts_;
  std::array<std::size_t, 3> sizes_{0, 0, 0};
};

/// Tripartite graph with integer edge weights in [-W, W]; weights are
/// stored parallel to graph().edges().
class WeightedTripartiteGraph {
 public:
  WeightedTripartiteGraph() = default;
  WeightedTripartiteGraph(TripartiteGraph tg, std::vector<std::int64_t> weights,
                          std::int64_t bound);

  const TripartiteGraph& tripartite() const { return tg_; }
  const Graph& graph() const { return tg_.graph(); }
  std::int64_t bound() const { return bound_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::optional<std::int64_t> weight(Vertex a, Vertex b) const;

  friend bool operator==(const WeightedTripartiteGraph&, const WeightedTripartiteGraph&) = default;

 private:
  TripartiteGraph tg_;
  std::vector<std::int64_t> weights_;
  std::int64_t bound_ = 0;
};

/// Three copies of every vertex, in blocks [0,n), [n,2n), [2n,3n) for parts
/// A, B, C. Each edge {u,v} yields the six cross-part edges between copies of
/// u and copies of v.
TripartiteGraph tripartite_embed(const Graph& g);

/// Copy of original vertex v in part p of an embedding of an n-vertex graph.
inline Vertex embedded_copy(Vertex v, Part p, std::size_t n) {
  return static_cast<Vertex>(static_cast<std::size_t>(p) * n + v);
}
inline Vertex embedded_original(Vertex copy, std::size_t n) {
  return static_cast<Vertex>(copy % n);
}

}  // namespace cyclescrub
