#include "cyclescrub/reductions.hpp"

#include <stdexcept>

namespace cyclescrub {

namespace {

// Subdivides the edges selected by `pick` to length t.
template <class Pick>
Subdivision subdivide(const Graph& g, std::size_t t, Pick&& pick) {
  Subdivision out;
  out.original_n = g.vertex_count();
  std::size_t next = g.vertex_count();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (t == 1 || !pick(e)) {
      edges.push_back(e);
      continue;
    }
    std::vector<Vertex> interior;
    Vertex prev = e.u;
    for (std::size_t i = 1; i < t; ++i) {
      const auto fresh = static_cast<Vertex>(next++);
      interior.push_back(fresh);
      edges.push_back(make_edge(prev, fresh));
      prev = fresh;
    }
    edges.push_back(make_edge(prev, e.v));
    out.paths.emplace(e, std::move(interior));
  }
  out.graph = Graph(next, std::move(edges));
  return out;
}

bool is_power_of_two(int k) { return k > 0 && (k & (k - 1)) == 0; }

Subdivision subdivide_bc_any(const TripartiteGraph& tg, std::size_t t) {
  return subdivide(tg.graph(), t, [&](const Edge& e) {
    const Part pu = tg.part(e.u), pv = tg.part(e.v);
    return (pu == Part::B && pv == Part::C) || (pu == Part::C && pv == Part::B);
  });
}

}  // namespace

Subdivision subdivide_uniform(const Graph& g, std::size_t t) {
  if (t < 1) throw std::invalid_argument("subdivision path length must be at least 1");
  return subdivide(g, t, [](const Edge&) { return true; });
}

Subdivision subdivide_bc(const TripartiteGraph& tg, std::size_t t) {
  if (t < 2) throw std::invalid_argument("B-C subdivision path length must be at least 2");
  return subdivide_bc_any(tg, t);
}

std::optional<int> smallest_odd_prime_divisor(int k) {
  while (k > 0 && k % 2 == 0) k /= 2;
  for (int p = 3; p * p <= k; p += 2) {
    if (k % p == 0) return p;
  }
  if (k > 1) return k;
  return std::nullopt;
}

CycleReduction triangle_to_kcycle(const TripartiteGraph& tg, int k) {
  if (k < 3) throw std::invalid_argument("k must be at least 3");
  CycleReduction out;
  auto& cert = out.certificate;
  cert.kind = "triangle-to-kcycle";
  cert.source = "triangle";
  cert.target = std::to_string(k) + "-cycle";
  cert.k = k;
  if (k == 3) {
    cert.forward_map = "identity";
    out.graph = tg.graph();
    return out;
  }
  if (is_power_of_two(k)) {
    cert.refused = true;
    cert.source = "4-cycle";
    cert.uniform_path_length = static_cast<std::size_t>(k / 4);
    cert.forward_map = "no triangle gadget for k a power of two; subdivide every edge of a 4-cycle source to length " +
                       std::to_string(k / 4);
    return out;
  }
  const int p = *smallest_odd_prime_divisor(k);
  cert.prime = p;
  cert.bc_path_length = static_cast<std::size_t>(p - 2);
  cert.uniform_path_length = static_cast<std::size_t>(k / p);
  cert.forward_map = "triangle (a,b,c) -> cycle a, b, path(b,c), c, with every edge then stretched to length " +
                     std::to_string(k / p);
  const Subdivision bc = subdivide_bc_any(tg, cert.bc_path_length);
  out.graph = subdivide_uniform(bc.graph, cert.uniform_path_length).graph;
  return out;
}

CycleReduction four_cycle_to_kcycle(const Graph& g, int k) {
  if (k < 4 || !is_power_of_two(k)) throw std::invalid_argument("k must be a power of two, at least 4");
  CycleReduction out;
  auto& cert = out.certificate;
  cert.kind = "four-cycle-to-kcycle";
  cert.source = "4-cycle";
  cert.target = std::to_string(k) + "-cycle";
  cert.k = k;
  cert.uniform_path_length = static_cast<std::size_t>(k / 4);
  cert.forward_map = "every edge stretched to length " + std::to_string(k / 4);
  out.graph = subdivide_uniform(g, cert.uniform_path_length).graph;
  return out;
}

ZeroTriangleReduction zero_triangle_to_triangle(const WeightedTripartiteGraph& wg) {
  const TripartiteGraph& tg = wg.tripartite();
  const std::int64_t W = wg.bound();
  if (W < 0) throw std::invalid_argument("weight bound must be non-negative");
  const std::int64_t span = 6 * W + 1;

  ZeroTriangleReduction out;
  out.weight_bound = W;
  std::vector<Vertex> base(tg.vertex_count(), 0);  // first output id of each source vertex
  std::vector<Part> parts;
  for (Vertex v = 0; v < tg.vertex_count(); ++v) {
    if (tg.part(v) != Part::A) continue;
    base[v] = static_cast<Vertex>(out.origin.size());
    out.origin.emplace_back(v, 0);
    parts.push_back(Part::A);
  }
  for (Vertex v = 0; v < tg.vertex_count(); ++v) {
    if (tg.part(v) == Part::A) continue;
    base[v] = static_cast<Vertex>(out.origin.size());
    for (std::int64_t i = -3 * W; i <= 3 * W; ++i) {
      out.origin.emplace_back(v, i);
      parts.push_back(tg.part(v));
    }
  }
  auto copy = [&](Vertex v, std::int64_t i) { return static_cast<Vertex>(base[v] + (i + 3 * W)); };

  std::vector<Edge> edges;
  const auto& src = wg.graph().edges();
  for (std::size_t e = 0; e < src.size(); ++e) {
    Vertex u = src[e].u, v = src[e].v;
    const std::int64_t w = wg.weights()[e];
    if (tg.part(u) > tg.part(v)) std::swap(u, v);
    const Part pu = tg.part(u), pv = tg.part(v);
    if (pu == Part::A && pv == Part::B) {
      edges.push_back(make_edge(base[u], copy(v, w)));
    } else if (pu == Part::A && pv == Part::C) {
      edges.push_back(make_edge(base[u], copy(v, -w)));
    } else {
      for (std::int64_t i = -2 * W; i <= 2 * W; ++i) edges.push_back(make_edge(copy(u, i), copy(v, i + w)));
    }
  }
  out.graph = TripartiteGraph(Graph(out.origin.size(), std::move(edges)), std::move(parts));

  auto& cert = out.certificate;
  cert.kind = "zero-triangle";
  cert.source = "zero-weight triangle";
  cert.target = "triangle";
  cert.k = 3;
  cert.weight_bound = W;
  cert.forward_map = "(a,b,c) with w(a,b)=x, w(a,c)=y -> (a, b_x, c_-y); copies per B/C vertex: " +
                     std::to_string(span);
  return out;
}

nlohmann::json to_json(const ReductionCertificate& c) {
  nlohmann::json j = {{"kind", c.kind},
                      {"source", c.source},
                      {"target", c.target},
                      {"forward_map", c.forward_map},
                      {"k", c.k},
                      {"bc_path_length", c.bc_path_length},
                      {"uniform_path_length", c.uniform_path_length},
                      {"refused", c.refused}};
  j["prime"] = c.prime ? nlohmann::json(*c.prime) : nlohmann::json(nullptr);
  j["weight_bound"] = c.weight_bound ? nlohmann::json(*c.weight_bound) : nlohmann::json(nullptr);
  return j;
}

ReductionCertificate certificate_from_json(const nlohmann::json& j) {
  ReductionCertificate c;
  c.kind = j.at("kind").get<std::string>();
  c.source = j.at("source").get<std::string>();
  c.target = j.at("target").get<std::string>();
  c.forward_map = j.at("forward_map").get<std::string>();
  c.k = j.at("k").get<int>();
  c.bc_path_length = j.at("bc_path_length").get<std::size_t>();
  c.uniform_path_length = j.at("uniform_path_length").get<std::size_t>();
  c.refused = j.at("refused").get<bool>();
  if (!j.at("prime").is_null()) c.prime = j.at("prime").get<int>();
  if (!j.at("weight_bound").is_null()) c.weight_bound = j.at("weight_bound").get<std::int64_t>();
  return c;
}

}  // namespace cyclescrub
