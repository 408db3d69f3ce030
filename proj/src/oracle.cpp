#include "cyclescrub/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "cyclescrub/bit_matrix.hpp"

namespace cyclescrub {

namespace {

void check_k(int k) {
  if (k < kMinCycleLength || k > kMaxCycleLength) {
    throw std::out_of_range("cycle length " + std::to_string(k) + " outside [3, 8]");
  }
}

bool sorted_intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return false;
}

bool edge_in_triangle(const Graph& g, Edge e) {
  return sorted_intersect(g.neighbors(e.u), g.neighbors(e.v));
}

// DFS over simple paths starting at `start` through vertices > start.
// Each k-cycle is found exactly once thanks to the path[1] < path[k-1] rule.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, int k) : g_(g), k_(static_cast<std::size_t>(k)), on_path_(g.vertex_count(), 0) {}

  template <class Visit>
  void run(Vertex start, Visit&& visit) {
    path_.assign(1, start);
    on_path_[start] = 1;
    extend(std::forward<Visit>(visit));
    on_path_[start] = 0;
  }

 private:
  template <class Visit>
  void extend(Visit&& visit) {
    const Vertex start = path_.front();
    const Vertex last = path_.back();
    if (path_.size() == k_) {
      if (path_[1] < path_.back() && g_.has_edge(last, start)) visit(path_);
      return;
    }
    for (Vertex next : g_.neighbors(last)) {
      if (next <= start || on_path_[next]) continue;
      on_path_[next] = 1;
      path_.push_back(next);
      extend(visit);
      path_.pop_back();
      on_path_[next] = 0;
    }
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<std::uint8_t> on_path_;
  std::vector<Vertex> path_;
};

}  // namespace

Cycle canonical_cycle(std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  if (len == 0) return {};
  const std::size_t at = static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  Cycle forward(len), backward(len);
  for (std::size_t i = 0; i < len; ++i) {
    forward[i] = cycle[(at + i) % len];
    backward[i] = cycle[(at + len - i) % len];
  }
  return std::min(forward, backward);
}

CycleList enumerate_triangles(const Graph& g) {
  CycleList out;
  for (const Edge& e : g.edges()) {
    auto nu = g.neighbors(e.u);
    auto nv = g.neighbors(e.v);
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] == nv[j]) {
        // Report each triangle once, from its two smallest vertices.
        if (nu[i] > e.v) out.push_back({e.u, e.v, nu[i]});
        ++i, ++j;
      } else if (nu[i] < nv[j]) {
        ++i;
      } else {
        ++j;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_triangles(const Graph& g) { return enumerate_triangles(g).size(); }

EdgeFlags all_edge_triangle(const Graph& g) {
  const auto& edges = g.edges();
  EdgeFlags flags(edges.size(), 0);
  const auto m = static_cast<std::int64_t>(edges.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < m; ++i) flags[i] = edge_in_triangle(g, edges[i]) ? 1 : 0;
  return flags;
}

EdgeFlags all_edge_triangle_serial(const Graph& g) {
  EdgeFlags flags;
  flags.reserve(g.edge_count());
  for (const Edge& e : g.edges()) flags.push_back(edge_in_triangle(g, e) ? 1 : 0);
  return flags;
}

CycleList enumerate_k_cycles(const Graph& g, int k) {
  check_k(k);
  CycleList out;
  CycleSearch search(g, k);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    search.run(s, [&](const std::vector<Vertex>& path) { out.push_back(path); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_k_cycles(const Graph& g, int k) {
  check_k(k);
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  std::uint64_t total = 0;
#pragma omp parallel reduction(+ : total)
  {
    CycleSearch search(g, k);
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t s = 0; s < n; ++s) {
      search.run(static_cast<Vertex>(s), [&](const std::vector<Vertex>&) { ++total; });
    }
  }
  return total;
}

std::uint64_t count_k_cycles_serial(const Graph& g, int k) {
  check_k(k);
  std::uint64_t total = 0;
  CycleSearch search(g, k);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    search.run(s, [&](const std::vector<Vertex>&) { ++total; });
  }
  return total;
}

std::optional<std::size_t> girth(const Graph& g) {
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.vertex_count();
  std::size_t best = kUnseen;
  std::vector<std::size_t> dist(n, kUnseen);
  std::vector<Vertex> parent(n, 0);
  std::vector<Vertex> touched;
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    for (Vertex v : touched) dist[v] = kUnseen;
    touched.assign(1, root);
    dist[root] = 0;
    queue.assign(1, root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      // Nothing shorter can be found beyond this depth.
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          touched.push_back(w);
          queue.push_back(w);
        } else if (parent[u] != w || u == root) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnseen) return std::nullopt;
  return best;
}

std::optional<ZeroTriangleWitness> zero_triangle_brute(const WeightedTripartiteGraph& wg) {
  const auto& tg = wg.tripartite();
  const Graph& g = wg.graph();
  for (Vertex a : tg.vertices_in(Part::A)) {
    for (Vertex b : tg.vertices_in(Part::B)) {
      auto wab = wg.weight(a, b);
      if (!wab) continue;
      for (Vertex c : tg.vertices_in(Part::C)) {
        auto wac = wg.weight(a, c);
        if (!wac || !g.has_edge(b, c)) continue;
        if (*wab + *wac + *wg.weight(b, c) == 0) return ZeroTriangleWitness{a, b, c};
      }
    }
  }
  return std::nullopt;
}

bool triangle_detect_degree_split(const Graph& g, double delta) {
  if (delta < 0.0 || delta >= 1.0 / 3.0) {
    throw std::invalid_argument("delta must lie in [0, 1/3)");
  }
  const double m = static_cast<double>(g.edge_count());
  const double threshold = m > 0 ? std::pow(m, 1.0 / 3.0 - delta) : 0.0;

  std::vector<Vertex> high;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto nb = g.neighbors(v);
    if (static_cast<double>(nb.size()) >= threshold) {
      high.push_back(v);
      continue;
    }
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) return true;
      }
    }
  }

  // Every remaining triangle has all three vertices in `high`.
  const Graph h = g.induced(high);
  BitMatrix adj(h.vertex_count(), h.vertex_count());
  for (const Edge& e : h.edges()) {
    adj.set(e.u, e.v);
    adj.set(e.v, e.u);
  }
  const BitMatrix two_paths = bool_matmul(adj, adj);
  for (const Edge& e : h.edges()) {
    if (two_paths.get(e.u, e.v)) return true;
  }
  return false;
}

}  // namespace cyclescrub
