#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclescrub/graph.hpp"
#include "json.hpp"

namespace cyclescrub {

/// Output of an edge-subdivision gadget. Fresh vertices are appended after
/// the original range; `paths` maps each subdivided edge {u, v} (u < v) to
/// its interior vertices listed from u to v.
struct Subdivision {
  Graph graph;
  std::size_t original_n = 0;
  std::map<Edge, std::vector<Vertex>> paths;
};

/// Replaces every edge by a path of length t (t - 1 fresh vertices). t >= 1.
Subdivision subdivide_uniform(const Graph& g, std::size_t t);

/// Replaces every B-C edge by a path of length t; A-B and A-C edges stay.
/// t >= 2.
Subdivision subdivide_bc(const TripartiteGraph& tg, std::size_t t);

struct ReductionCertificate {
  std::string kind;       // gadget identifier
  std::string source;     // witness type consumed
  std::string target;     // witness type produced
  std::string forward_map;
  int k = 0;
  std::optional<int> prime;           // odd prime divisor used
  std::size_t bc_path_length = 1;     // t of the B-C subdivision (1 = none)
  std::size_t uniform_path_length = 1;
  std::optional<std::int64_t> weight_bound;
  bool refused = false;

  friend bool operator==(const ReductionCertificate&, const ReductionCertificate&) = default;
};

nlohmann::json to_json(const ReductionCertificate& cert);
ReductionCertificate certificate_from_json(const nlohmann::json& j);

/// Smallest odd prime dividing k, if any.
std::optional<int> smallest_odd_prime_divisor(int k);

struct CycleReduction {
  std::optional<Graph> graph;  // absent when the gadget is refused
  ReductionCertificate certificate;
};

/// Triangles of tg to k-cycles. For k with an odd prime divisor p: B-C edges
/// subdivided to length p - 2, then every edge to length k / p. For k a power
/// of two the triangle route is refused and the certificate names the
/// 4-cycle route instead. Throws std::invalid_argument for k < 3.
CycleReduction triangle_to_kcycle(const TripartiteGraph& tg, int k);

/// 4-cycles of g to k-cycles for k = 4 * 2^i, by uniform subdivision with
/// t = k / 4.
CycleReduction four_cycle_to_kcycle(const Graph& g, int k);

/// Zero-weight triangles to triangles. A keeps its vertices (first, in id
/// order); every B or C vertex u becomes copies u_{-3W..3W}.
struct ZeroTriangleReduction {
  TripartiteGraph graph;
  std::int64_t weight_bound = 0;
  /// Per output vertex: (source vertex, copy offset); offset 0 for A.
  std::vector<std::pair<Vertex, std::int64_t>> origin;
  ReductionCertificate certificate;

  std::size_t copies() const { return static_cast<std::size_t>(6 * weight_bound + 1); }
};

ZeroTriangleReduction zero_triangle_to_triangle(const WeightedTripartiteGraph& wg);

}  // namespace cyclescrub
