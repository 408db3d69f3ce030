#include "doctest.h"

#include <sstream>

#include "cyclescrub/distance_harness.hpp"
#include "cyclescrub/four_cycle.hpp"
#include "cyclescrub/generators.hpp"
#include "reference.hpp"

using namespace cyclescrub;

namespace {

RemovalReport report_for(std::uint64_t seed, int k) {
  PipelineOptions o;
  o.k = k;
  o.alpha = default_alpha(kDefaultOmega);
  o.seed = seed;
  const std::size_t n = 60 + 10 * (seed % 5);
  return remove_most_k_cycles(gen_random_bounded(n, isqrt(n), seed), o);
}

bool oriented(const TripartiteGraph& tg, Edge e, Orientation o) {
  const auto [p, q] = orientation_parts(o);
  return (tg.part(e.u) == p && tg.part(e.v) == q) || (tg.part(e.u) == q && tg.part(e.v) == p);
}

}  // namespace

TEST_CASE("orientation names") {
  for (auto o : {Orientation::BC, Orientation::AB, Orientation::AC}) {
    CHECK(orientation_from_name(orientation_name(o)) == o);
  }
  CHECK(orientation_parts(Orientation::AC) == std::pair{Part::A, Part::C});
  CHECK_THROWS_AS(orientation_from_name("CA"), std::invalid_argument);
}

TEST_CASE("instances remove exactly the oriented slice edges") {
  const auto report = report_for(1, 4);
  const auto instances = make_distance_instances(report, Orientation::BC);
  for (const auto& inst : instances) {
    const Graph& full = inst.slice.graph.graph();
    CHECK(inst.graph.edge_count() + inst.queries.size() == full.edge_count());
    CHECK_FALSE(inst.queries.empty());
    for (const Edge& q : inst.queries) CHECK(oriented(report.input, q, Orientation::BC));
    for (const Edge& e : inst.graph.edges()) CHECK_FALSE(oriented(report.input, inst.slice.to_global(e), Orientation::BC));
  }
}

TEST_CASE("filter candidates with exact answers equals the triangle oracle") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    for (int k : {4, 5}) {
      const auto report = report_for(seed, k);
      const auto truth = ref::edge_in_triangle(report.input.graph());
      for (auto o : {Orientation::BC, Orientation::AB, Orientation::AC}) {
        const auto instances = make_distance_instances(report, o);
        const auto answers = exact_bfs_answers(instances);
        const auto m = filter_candidates(report, instances, answers, k);
        std::size_t expected_edges = 0;
        for (std::size_t i = 0; i < report.input.graph().edges().size(); ++i) {
          const Edge e = report.input.graph().edges()[i];
          if (!oriented(report.input, e, o)) continue;
          ++expected_edges;
          const auto pos = std::lower_bound(m.edges.begin(), m.edges.end(), e) - m.edges.begin();
          REQUIRE(static_cast<std::size_t>(pos) < m.edges.size());
          CHECK(m.edges[pos] == e);
          CHECK(m.in_triangle[pos] == truth[i]);
        }
        CHECK(m.edges.size() == expected_edges);
      }
    }
  }
}

TEST_CASE("exact answers agree with a plain BFS") {
  const auto report = report_for(3, 4);
  const auto instances = make_distance_instances(report);
  const auto answers = exact_bfs_answers(instances);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    for (const Edge& q : inst.queries) {
      const auto lu = static_cast<Vertex>(std::lower_bound(inst.slice.global.begin(), inst.slice.global.end(), q.u) -
                                          inst.slice.global.begin());
      const auto lv = static_cast<Vertex>(std::lower_bound(inst.slice.global.begin(), inst.slice.global.end(), q.v) -
                                          inst.slice.global.begin());
      CHECK(answers.at({i, q}) == ref::bfs_distance(inst.graph, lu, lv));
    }
  }
}

TEST_CASE("distance gap on slices") {
  // A query edge in a slice triangle is at distance 2 once removed; in a
  // slice with no triangle and no 4..k cycle every query is at distance
  // at least k - 1.
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const int k = 5;
    const auto report = report_for(seed, k);
    const auto instances = make_distance_instances(report);
    const auto answers = exact_bfs_answers(instances);
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const Graph& full = instances[i].slice.graph.graph();
      bool clean = ref::sequence_cycle_count(full, 3) == 0;
      for (int len = 4; len <= k && clean; ++len) clean = ref::sequence_cycle_count(full, len) == 0;
      const auto tri = ref::edge_in_triangle(full);
      for (const Edge& q : instances[i].queries) {
        const auto d = answers.at({i, q});
        const auto& gl = instances[i].slice.global;
        const Vertex lu = static_cast<Vertex>(std::lower_bound(gl.begin(), gl.end(), q.u) - gl.begin());
        const Vertex lv = static_cast<Vertex>(std::lower_bound(gl.begin(), gl.end(), q.v) - gl.begin());
        if (tri[*full.edge_index(lu, lv)]) CHECK(d == std::optional<std::uint64_t>(2));
        if (clean) CHECK((!d || *d >= static_cast<std::uint64_t>(k - 1)));
      }
    }
  }
}

TEST_CASE("update script replay reproduces the exact answers") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto report = report_for(seed, 4);
    const auto instances = make_distance_instances(report);
    const auto script = emit_update_sequence(instances, report.input.vertex_count(), "init.txt");
    CHECK(script.text.rfind("INIT init.txt\n", 0) == 0);
    std::istringstream in(script.text);
    const auto replayed = replay_update_script(in, [&](const std::string& name) {
      CHECK(name == "init.txt");
      return script.initial;
    });
    CHECK(replayed == exact_bfs_answers(instances));
  }
}

TEST_CASE("replay rejects malformed scripts") {
  auto load = [](const std::string&) { return Graph(4, {{0, 1}}); };
  std::istringstream no_init("PHASE 1\nQUERY 0 1\n");
  CHECK_THROWS_AS(replay_update_script(no_init, load), std::invalid_argument);
  std::istringstream bad_delete("INIT g\nPHASE 1\nDELETE 2 3\n");
  CHECK_THROWS_AS(replay_update_script(bad_delete, load), std::invalid_argument);
  std::istringstream bad_vertex("INIT g\nPHASE 1\nQUERY 0 9\n");
  CHECK_THROWS_AS(replay_update_script(bad_vertex, load), std::invalid_argument);
}

TEST_CASE("answers file round trip and missing answers") {
  const auto report = report_for(2, 4);
  const auto instances = make_distance_instances(report);
  auto answers = exact_bfs_answers(instances);
  REQUIRE_FALSE(answers.empty());
  answers.begin()->second = std::nullopt;
  std::ostringstream out;
  write_answers(answers, out);
  CHECK(out.str().find("inf") != std::string::npos);
  std::istringstream in(out.str());
  CHECK(read_answers(in) == answers);
  answers.erase(answers.begin());
  CHECK_THROWS_AS(filter_candidates(report, instances, answers, 4), std::invalid_argument);
}

TEST_CASE("girth gap labels") {
  PipelineOptions o;
  o.alpha = default_alpha(kDefaultOmega);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    o.seed = seed;
    const auto report = remove_all_4cycles(gen_random_bounded(100, 10, seed), o);
    for (const auto& inst : girth_gap_instances(report)) {
      const auto g = ref::short_girth(inst.slice.graph.graph());
      if (inst.has_triangle) CHECK(g == std::optional<std::size_t>(3));
      else CHECK((!g || *g >= 5));
    }
  }
  CHECK_THROWS_AS(girth_gap_instances(report_for(1, 4)), std::invalid_argument);
}
