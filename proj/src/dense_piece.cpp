#include "cyclescrub/dense_piece.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "cyclescrub/bit_matrix.hpp"

namespace cyclescrub {

namespace {

bool contains(std::span<const Vertex> sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

void check_degree(const Graph& g, const DensePieceParams& params) {
  if (g.max_degree() > params.degree_bound) {
    throw GraphError("max degree " + std::to_string(g.max_degree()) + " exceeds bound " +
                     std::to_string(params.degree_bound));
  }
}

std::vector<Vertex> without_vertex(std::span<const Vertex> list, Vertex drop) {
  std::vector<Vertex> out;
  out.reserve(list.size());
  for (Vertex v : list) {
    if (v != drop) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> sorted_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void sort_unique(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

// Shared loop of remove_dense_pieces and reduce_triangle_count. `probe`
// returns the next accepted piece of the working graph, or nullopt.
template <class Probe>
DenseRemoval removal_loop(const Graph& g, const DensePieceParams& params, Probe&& probe) {
  check_degree(g, params);
  DenseRemoval out;
  Graph work = g;
  for (;;) {
    if (out.pieces >= params.iteration_cap) {
      out.cap_reached = true;
      break;
    }
    auto piece = probe(work, out.probes);
    if (!piece) break;
    ++out.pieces;
    auto hit = check_triangle_piece(work, piece->x_side, piece->y_side, params);
    out.reported.insert(out.reported.end(), hit.begin(), hit.end());
    out.removed.insert(out.removed.end(), piece->crossing.begin(), piece->crossing.end());
    work = work.without(piece->crossing);
  }
  sort_unique(out.reported);
  sort_unique(out.removed);
  out.scrubbed = std::move(work);
  return out;
}

std::optional<DensePiece> sample_dense_piece(const Graph& g, const DensePieceParams& params, Rng& rng,
                                             std::size_t& probes) {
  if (params.k < 4) throw std::invalid_argument("dense pieces need k >= 4");
  const auto length = static_cast<std::size_t>(params.k - 2);
  for (std::uint64_t i = 0; i < params.path_samples; ++i) {
    ++probes;
    auto path = sample_path(g, length, rng);
    if (!path) continue;
    const Vertex u = path->front();
    const Vertex w = path->back();
    const auto x_side = without_vertex(g.neighbors(u), w);
    const auto y_side = without_vertex(g.neighbors(w), u);
    if (estimate_density(g, x_side, y_side, params, rng)) return make_piece(g, u, w);
  }
  return std::nullopt;
}

}  // namespace

std::vector<Edge> crossing_edges(const Graph& g, std::span<const Vertex> X, std::span<const Vertex> Y) {
  std::vector<Edge> out;
  for (Vertex x : X) {
    const bool x_in_y = contains(Y, x);
    for (Vertex y : g.neighbors(x)) {
      if (!contains(Y, y)) continue;
      // {x, y} qualifies from both sides; keep the orientation with x < y.
      if (x_in_y && y < x && contains(X, y)) continue;
      out.push_back(make_edge(x, y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool estimate_density(const Graph& g, std::span<const Vertex> X, std::span<const Vertex> Y,
                      const DensePieceParams& params, Rng& rng) {
  if (X.empty() || Y.empty()) return false;
  const std::uint64_t population = static_cast<std::uint64_t>(X.size()) * Y.size();
  if (params.exact_fallback && params.pair_samples >= population) {
    return crossing_edges(g, X, Y).size() >= params.density_floor;
  }
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < params.pair_samples; ++i) {
    const Vertex x = X[rng.below(X.size())];
    const Vertex y = Y[rng.below(Y.size())];
    if (x != y && g.has_edge(x, y) && ++hits >= params.hit_threshold) return true;
  }
  return false;
}

std::optional<std::vector<Vertex>> sample_path(const Graph& g, std::size_t length, Rng& rng) {
  if (g.vertex_count() == 0 || length == 0) return std::nullopt;
  std::vector<Vertex> walk;
  walk.reserve(length);
  walk.push_back(static_cast<Vertex>(rng.below(g.vertex_count())));
  while (walk.size() < length) {
    const auto nb = g.neighbors(walk.back());
    if (nb.empty()) return std::nullopt;
    const Vertex next = nb[rng.below(nb.size())];
    if (std::find(walk.begin(), walk.end(), next) != walk.end()) return std::nullopt;
    walk.push_back(next);
  }
  return walk;
}

DensePiece make_piece(const Graph& g, Vertex u, Vertex w) {
  DensePiece p;
  p.u = u;
  p.w = w;
  p.x_side = without_vertex(g.neighbors(u), w);
  p.y_side = without_vertex(g.neighbors(w), u);
  p.piece = sorted_union(p.x_side, p.y_side);
  p.crossing = crossing_edges(g, p.x_side, p.y_side);
  return p;
}

std::optional<DensePiece> find_dense_piece(const Graph& g, const DensePieceParams& params, Rng& rng) {
  check_degree(g, params);
  std::size_t probes = 0;
  return sample_dense_piece(g, params, rng, probes);
}

std::vector<Edge> check_triangle_piece(const Graph& g, std::span<const Vertex> X,
                                       std::span<const Vertex> Y, const DensePieceParams& params) {
  std::vector<Edge> out;
  if (X.empty() || Y.empty()) return out;
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> in_x(n, 0), in_y(n, 0);
  for (Vertex x : X) in_x[x] = 1;
  for (Vertex y : Y) in_y[y] = 1;
  auto is_xy = [&](Vertex p, Vertex q) {
    return p != q && ((in_x[p] && in_y[q]) || (in_y[p] && in_x[q]));
  };

  // Degree of every vertex into Z = X u Y.
  const auto Z = sorted_union(X, Y);
  std::vector<std::uint32_t> dz(n, 0);
  std::vector<Vertex> touched;
  for (Vertex z : Z) {
    for (Vertex v : g.neighbors(z)) {
      if (dz[v]++ == 0) touched.push_back(v);
    }
  }
  std::sort(touched.begin(), touched.end());

  // An apex needs two neighbors in Z.
  const double tau = std::pow(static_cast<double>(std::max<std::size_t>(n, 1)), 0.5 - params.beta);
  std::vector<std::vector<Vertex>> low_buckets;
  std::vector<Vertex> high;
  for (Vertex v : touched) {
    if (dz[v] < 2) continue;
    if (static_cast<double>(dz[v]) >= tau) {
      high.push_back(v);
      continue;
    }
    const auto bucket = static_cast<std::size_t>(std::bit_width(dz[v]) - 1);
    if (low_buckets.size() <= bucket) low_buckets.resize(bucket + 1);
    low_buckets[bucket].push_back(v);
  }

  std::vector<Vertex> zn;
  for (const auto& bucket : low_buckets) {
    for (Vertex v : bucket) {
      zn.clear();
      for (Vertex z : g.neighbors(v)) {
        if (in_x[z] || in_y[z]) zn.push_back(z);
      }
      for (std::size_t i = 0; i < zn.size(); ++i) {
        for (std::size_t j = i + 1; j < zn.size(); ++j) {
          if (is_xy(zn[i], zn[j]) && g.has_edge(zn[i], zn[j])) {
            out.push_back(make_edge(v, zn[i]));
            out.push_back(make_edge(v, zn[j]));
            out.push_back(make_edge(zn[i], zn[j]));
          }
        }
      }
    }
  }

  if (!high.empty()) {
    auto adjacency = [&](std::span<const Vertex> rows, std::span<const Vertex> cols) {
      BitMatrix m(rows.size(), cols.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (Vertex t : g.neighbors(rows[i])) {
          auto it = std::lower_bound(cols.begin(), cols.end(), t);
          if (it != cols.end() && *it == t) m.set(i, static_cast<std::size_t>(it - cols.begin()));
        }
      }
      return m;
    };
    const BitMatrix x_h = adjacency(X, high), h_y = adjacency(high, Y);
    const BitMatrix h_x = adjacency(high, X), y_x = adjacency(Y, X), x_y = adjacency(X, Y);
    // XY edges with a high apex; high-X edges closing on an XY edge;
    // high-Y edges closing on an XY edge.
    const BitMatrix p1 = bool_matmul(x_h, h_y);
    const BitMatrix p2 = bool_matmul(h_y, y_x);
    const BitMatrix p3 = bool_matmul(h_x, x_y);
    for (std::size_t i = 0; i < X.size(); ++i) {
      for (std::size_t j = 0; j < Y.size(); ++j) {
        if (x_y.get(i, j) && p1.get(i, j)) out.push_back(make_edge(X[i], Y[j]));
      }
    }
    for (std::size_t h = 0; h < high.size(); ++h) {
      for (std::size_t i = 0; i < X.size(); ++i) {
        if (h_x.get(h, i) && p2.get(h, i)) out.push_back(make_edge(high[h], X[i]));
      }
      for (std::size_t j = 0; j < Y.size(); ++j) {
        if (h_y.get(h, j) && p3.get(h, j)) out.push_back(make_edge(high[h], Y[j]));
      }
    }
  }

  sort_unique(out);
  return out;
}

DenseRemoval remove_dense_pieces(const Graph& g, const DensePieceParams& params, std::uint64_t seed) {
  Rng rng(seed);
  return removal_loop(g, params, [&](const Graph& work, std::size_t& probes) {
    return sample_dense_piece(work, params, rng, probes);
  });
}

DenseRemoval reduce_triangle_count(const Graph& g, const DensePieceParams& params, std::uint64_t seed) {
  Rng rng(seed);
  return removal_loop(g, params, [&](const Graph& work, std::size_t& probes) -> std::optional<DensePiece> {
    if (work.vertex_count() == 0) return std::nullopt;
    for (std::uint64_t i = 0; i < params.path_samples; ++i, ++probes) {
      const auto v = static_cast<Vertex>(rng.below(work.vertex_count()));
      const auto nb = work.neighbors(v);
      if (!estimate_density(work, nb, nb, params, rng)) continue;
      DensePiece p;
      p.u = p.w = v;
      p.x_side.assign(nb.begin(), nb.end());
      p.y_side = p.x_side;
      p.piece = p.x_side;
      p.crossing = crossing_edges(work, nb, nb);
      return p;
    }
    return std::nullopt;
  });
}

}  // namespace cyclescrub
