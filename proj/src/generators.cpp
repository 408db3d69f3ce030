#include "cyclescrub/generators.hpp"

#include <unordered_set>

#include "cyclescrub/rng.hpp"

namespace cyclescrub {

namespace {

std::vector<Part> block_parts(const std::array<std::size_t, 3>& sizes) {
  std::vector<Part> parts;
  parts.reserve(sizes[0] + sizes[1] + sizes[2]);
  for (int p = 0; p < 3; ++p) parts.insert(parts.end(), sizes[p], static_cast<Part>(p));
  return parts;
}

// Shared rejection loop. `allowed` filters candidate pairs.
template <class Allowed>
void fill_bounded(std::size_t n, std::size_t d, std::size_t budget, Rng& rng,
                  std::vector<Edge>& edges, std::vector<std::size_t>& degree,
                  std::unordered_set<std::uint64_t>& present, Allowed allowed) {
  if (n < 2 || d == 0) return;
  const std::size_t cap = 20 * budget;
  for (std::size_t attempt = 0; attempt < cap && edges.size() < budget; ++attempt) {
    const auto a = static_cast<Vertex>(rng.below(n));
    const auto b = static_cast<Vertex>(rng.below(n));
    if (a == b || !allowed(a, b)) continue;
    if (degree[a] >= d || degree[b] >= d) continue;
    const Edge e = make_edge(a, b);
    if (!present.insert(edge_key(e)).second) continue;
    edges.push_back(e);
    ++degree[a];
    ++degree[b];
  }
}

}  // namespace

std::array<std::size_t, 3> balanced_part_sizes(std::size_t n) {
  return {(n + 2) / 3, (n + 1) / 3, n / 3};
}

Graph gen_random_bounded(std::size_t n, std::size_t d, std::uint64_t seed,
                         std::optional<std::size_t> edge_budget) {
  if (n > 0 && d > n - 1) {
    throw std::invalid_argument("max degree " + std::to_string(d) + " exceeds n-1 = " +
                                std::to_string(n - 1));
  }
  if (n == 0) return Graph(0);
  Rng rng(derive_seed(seed, 0x67656e));
  std::vector<Edge> edges;
  std::vector<std::size_t> degree(n, 0);
  std::unordered_set<std::uint64_t> present;
  fill_bounded(n, d, edge_budget.value_or(n * d / 4), rng, edges, degree, present,
               [](Vertex, Vertex) { return true; });
  return Graph(n, std::move(edges)).with_degree_bound(d);
}

TripartiteGraph gen_random_tripartite(std::size_t n, std::size_t d, std::uint64_t seed,
                                      std::optional<std::size_t> edge_budget) {
  auto parts = block_parts(balanced_part_sizes(n));
  Rng rng(derive_seed(seed, 0x747269));
  std::vector<Edge> edges;
  std::vector<std::size_t> degree(n, 0);
  std::unordered_set<std::uint64_t> present;
  fill_bounded(n, d, edge_budget.value_or(n * d / 4), rng, edges, degree, present,
               [&](Vertex a, Vertex b) { return parts[a] != parts[b]; });
  return TripartiteGraph(Graph(n, std::move(edges)), std::move(parts));
}

PlantedInstance gen_planted_triangle(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n < 3 || d < 2) throw std::invalid_argument("planted triangle needs n >= 3 and d >= 2");
  const auto sizes = balanced_part_sizes(n);
  auto parts = block_parts(sizes);
  Rng rng(derive_seed(seed, 0x706c61));
  const auto a = static_cast<Vertex>(rng.below(sizes[0]));
  const auto b = static_cast<Vertex>(sizes[0] + rng.below(sizes[1]));
  const auto c = static_cast<Vertex>(sizes[0] + sizes[1] + rng.below(sizes[2]));

  std::vector<Edge> edges{make_edge(a, b), make_edge(b, c), make_edge(a, c)};
  std::vector<std::size_t> degree(n, 0);
  degree[a] = degree[b] = degree[c] = 2;
  std::unordered_set<std::uint64_t> present;
  for (const auto& e : edges) present.insert(edge_key(e));
  fill_bounded(n, d, 3 + n * d / 4, rng, edges, degree, present,
               [&](Vertex x, Vertex y) { return parts[x] != parts[y]; });

  PlantedInstance out;
  out.graph = TripartiteGraph(Graph(n, std::move(edges)), std::move(parts));
  out.triangle = {a, b, c};
  out.planted_edge = make_edge(b, c);
  return out;
}

WeightedTripartiteGraph gen_weighted_tripartite(std::size_t size_a, std::size_t size_b,
                                                std::size_t size_c, double density,
                                                std::int64_t bound, std::uint64_t seed) {
  if (bound < 0) throw std::invalid_argument("weight bound must be non-negative");
  auto parts = block_parts({size_a, size_b, size_c});
  const std::size_t n = parts.size();
  Rng rng(derive_seed(seed, 0x776569));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (parts[u] != parts[v] && rng.unit() < density) edges.push_back({u, v});
    }
  }
  // Edges are generated in sorted order, so weights line up with Graph::edges().
  std::vector<std::int64_t> weights(edges.size());
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  for (auto& w : weights) w = static_cast<std::int64_t>(rng.below(span)) - bound;
  TripartiteGraph tg(Graph(n, std::move(edges)), std::move(parts));
  return WeightedTripartiteGraph(std::move(tg), std::move(weights), bound);
}

}  // namespace cyclescrub
