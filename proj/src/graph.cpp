#include "cyclescrub/graph.hpp"

#include <algorithm>
#include <cmath>

namespace cyclescrub {

std::size_t isqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Graph::Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= n_ || e.v >= n_) {
      throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} out of range for n=" + std::to_string(n_));
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge {" + std::to_string(dup->u) + "," +
                     std::to_string(dup->v) + "}");
  }
  build_adjacency();
}

void Graph::build_adjacency() {
  offsets_.assign(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  targets_.assign(2 * edges_.size(), 0);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // edges_ is sorted, so each list comes out sorted: smaller neighbors arrive
  // through (w,v) edges ordered by w, larger ones through (v,w) after them.
  for (const auto& e : edges_) targets_[fill[e.v]++] = e.u;
  for (const auto& e : edges_) targets_[fill[e.u]++] = e.v;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_ || a == b) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  const Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::without(std::span<const Edge> removed) const {
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (auto& e : drop) e = make_edge(e.u, e.v);
  std::sort(drop.begin(), drop.end());
  Graph out;
  out.n_ = n_;
  out.edges_.reserve(edges_.size());
  std::set_difference(edges_.begin(), edges_.end(), drop.begin(), drop.end(),
                      std::back_inserter(out.edges_));
  out.build_adjacency();
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> local(n_, static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> kept;
  for (Vertex v : keep) {
    for (Vertex w : neighbors(v)) {
      if (w > v && local[w] != static_cast<Vertex>(-1)) kept.push_back(make_edge(local[v], local[w]));
    }
  }
  return Graph(keep.size(), std::move(kept));
}

Graph Graph::with_degree_bound(std::size_t bound) const {
  if (max_degree() > bound) {
    throw GraphError("max degree " + std::to_string(max_degree()) + " exceeds declared bound " +
                     std::to_string(bound));
  }
  Graph out = *this;
  out.degree_bound_ = bound;
  return out;
}

char part_letter(Part p) { return "ABC"[static_cast<int>(p)]; }

Part part_from_letter(char c) {
  switch (c) {
    case 'A': return Part::A;
    case 'B': return Part::B;
    case 'C': return Part::C;
    default: throw GraphError(std::string("invalid part letter '") + c + "'");
  }
}

TripartiteGraph::TripartiteGraph(Graph graph, std::vector<Part> parts)
    : graph_(std::move(graph)), parts_(std::move(parts)) {
  if (parts_.size() != graph_.vertex_count()) {
    throw GraphError("part labelling has " + std::to_string(parts_.size()) +
                     " entries for " + std::to_string(graph_.vertex_count()) + " vertices");
  }
  for (const auto& e : graph_.edges()) {
    if (parts_[e.u] == parts_[e.v]) {
      throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} lies inside part " + part_letter(parts_[e.u]));
    }
  }
  for (Part p : parts_) ++sizes_[static_cast<int>(p)];
}

std::vector<Vertex> TripartiteGraph::vertices_in(Part p) const {
  std::vector<Vertex> out;
  out.reserve(part_size(p));
  for (std::size_t v = 0; v < parts_.size(); ++v) {
    if (parts_[v] == p) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

WeightedTripartiteGraph::WeightedTripartiteGraph(TripartiteGraph tg,
                                                 std::vector<std::int64_t> weights,
                                                 std::int64_t bound)
    : tg_(std::move(tg)), weights_(std::move(weights)), bound_(bound) {
  if (weights_.size() != tg_.graph().edge_count()) {
    throw GraphError("weight vector does not match edge count");
  }
  if (bound_ < 0) throw GraphError("negative weight bound");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < -bound_ || weights_[i] > bound_) {
      const auto& e = tg_.graph().edges()[i];
      throw GraphError("weight " + std::to_string(weights_[i]) + " of edge {" +
                       std::to_string(e.u) + "," + std::to_string(e.v) + "} exceeds bound " +
                       std::to_string(bound_));
    }
  }
}

std::optional<std::int64_t> WeightedTripartiteGraph::weight(Vertex a, Vertex b) const {
  auto idx = tg_.graph().edge_index(a, b);
  if (!idx) return std::nullopt;
  return weights_[*idx];
}

TripartiteGraph tripartite_embed(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(6 * g.edge_count());
  constexpr Part kParts[] = {Part::A, Part::B, Part::C};
  for (const auto& e : g.edges()) {
    for (Part pu : kParts) {
      for (Part pv : kParts) {
        if (pu != pv) edges.push_back(make_edge(embedded_copy(e.u, pu, n), embedded_copy(e.v, pv, n)));
      }
    }
  }
  std::vector<Part> parts(3 * n);
  for (std::size_t i = 0; i < 3 * n; ++i) parts[i] = kParts[i / std::max<std::size_t>(n, 1)];
  return TripartiteGraph(Graph(3 * n, std::move(edges)), std::move(parts));
}

}  // namespace cyclescrub
