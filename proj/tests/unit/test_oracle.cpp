#include "doctest.h"

#include "cyclescrub/generators.hpp"
#include "cyclescrub/oracle.hpp"
#include "reference.hpp"

using namespace cyclescrub;

TEST_CASE("canonical cycle picks the least rotation and direction") {
  const std::vector<Vertex> c{5, 2, 9, 3};
  CHECK(canonical_cycle(c) == Cycle{2, 5, 3, 9});
  CHECK(canonical_cycle(std::vector<Vertex>{2, 9, 3, 5}) == Cycle{2, 5, 3, 9});
}

TEST_CASE("triangle count matches trace of the adjacency cube") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = ref::random_gnp(25 + seed, 0.2, seed);
    const auto tris = enumerate_triangles(g);
    CHECK(tris.size() == ref::trace_cube_triangles(g));
    CHECK(count_triangles(g) == tris.size());
    CHECK(std::is_sorted(tris.begin(), tris.end()));
  }
}

TEST_CASE("all-edge-triangle agrees with the vertex scan, serial and parallel") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = ref::random_gnp(40, 0.12, seed + 100);
    const auto expected = ref::edge_in_triangle(g);
    CHECK(all_edge_triangle(g) == expected);
    CHECK(all_edge_triangle_serial(g) == expected);
  }
}

TEST_CASE("k-cycle enumeration equals the ordered-sequence reference") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Graph g = ref::random_gnp(14, 0.3, seed + 7);
    for (int k = 3; k <= 8; ++k) {
      const auto expected = ref::cycle_set(g, k);
      const auto listed = enumerate_k_cycles(g, k);
      CHECK(std::set<Cycle>(listed.begin(), listed.end()) == expected);
      CHECK(listed.size() == expected.size());
      CHECK(count_k_cycles(g, k) == expected.size());
      CHECK(count_k_cycles_serial(g, k) == expected.size());
    }
  }
  CHECK_THROWS_AS(count_k_cycles(ref::cycle_graph(4), 9), std::out_of_range);
  CHECK_THROWS_AS(enumerate_k_cycles(ref::cycle_graph(4), 2), std::out_of_range);
}

TEST_CASE("small cycle counts are known") {
  // K4 has 4 triangles and 3 four-cycles; K5 has 12 five-cycles.
  std::vector<Edge> k4, k5;
  for (Vertex a = 0; a < 5; ++a)
    for (Vertex b = a + 1; b < 5; ++b) {
      k5.push_back({a, b});
      if (b < 4) k4.push_back({a, b});
    }
  CHECK(count_k_cycles(Graph(4, k4), 3) == 4);
  CHECK(count_k_cycles(Graph(4, k4), 4) == 3);
  CHECK(count_k_cycles(Graph(5, k5), 5) == 12);
}

TEST_CASE("girth") {
  CHECK(girth(ref::cycle_graph(7)) == std::optional<std::size_t>(7));
  CHECK(girth(ref::cycle_graph(20)) == std::optional<std::size_t>(20));
  CHECK_FALSE(girth(Graph(4, {{0, 1}, {1, 2}, {1, 3}})).has_value());
  CHECK_FALSE(girth(Graph(0)).has_value());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = ref::random_gnp(16, 0.15, seed + 40);
    const auto expected = ref::short_girth(g);
    const auto got = girth(g);
    if (expected) CHECK(got == expected);
    else CHECK((!got || *got > 8));
  }
}

TEST_CASE("zero-triangle brute force matches the hash join") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto wg = gen_weighted_tripartite(6, 4, 4, 0.6, 3, seed);
    const auto w = zero_triangle_brute(wg);
    CHECK(w.has_value() == ref::has_zero_triangle(wg));
    if (w) {
      CHECK(*wg.weight(w->a, w->b) + *wg.weight(w->b, w->c) + *wg.weight(w->a, w->c) == 0);
      CHECK(wg.tripartite().part(w->a) == Part::A);
    }
  }
}

TEST_CASE("degree-split detection agrees with the triangle count") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = ref::random_gnp(30, 0.03 + 0.01 * static_cast<double>(seed % 8), seed);
    const bool expected = ref::trace_cube_triangles(g) > 0;
    CHECK(triangle_detect_degree_split(g, 0.0) == expected);
    CHECK(triangle_detect_degree_split(g, 0.2) == expected);
  }
  CHECK_THROWS_AS(triangle_detect_degree_split(ref::cycle_graph(3), 0.4), std::invalid_argument);
  CHECK_THROWS_AS(triangle_detect_degree_split(ref::cycle_graph(3), -0.1), std::invalid_argument);
}
