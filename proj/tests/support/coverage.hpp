#pragma once

#include <set>
#include <string>
#include <vector>

#include "cyclescrub/slicing.hpp"
#include "reference.hpp"

namespace ref {

// Input edges whose claimed triangle membership (E' or a triangle in some
// slice) differs from the vertex-scan oracle. `g` is the graph the report
// was computed from, in its own ids.
inline std::vector<Edge> coverage_mismatches(const Graph& g, const cyclescrub::RemovalReport& report) {
  std::set<Edge> claimed(report.e_prime.begin(), report.e_prime.end());
  for (const auto& slice : report.slices.materialize_all_serial()) {
    const Graph& s = slice.graph.graph();
    const std::size_t n = s.vertex_count();
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b : s.neighbors(a)) {
        if (b <= a) continue;
        for (Vertex c : s.neighbors(b)) {
          if (c <= b || !s.has_edge(a, c)) continue;
          claimed.insert(report.to_input(slice.to_global({a, b})));
          claimed.insert(report.to_input(slice.to_global(cyclescrub::make_edge(a, c))));
          claimed.insert(report.to_input(slice.to_global({b, c})));
        }
      }
    }
  }
  const auto truth = edge_in_triangle(g);
  std::vector<Edge> bad;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (static_cast<bool>(truth[i]) != (claimed.count(g.edges()[i]) > 0)) bad.push_back(g.edges()[i]);
  }
  for (const Edge& e : claimed) {
    if (!g.has_edge(e.u, e.v)) bad.push_back(e);
  }
  return bad;
}

}  // namespace ref
