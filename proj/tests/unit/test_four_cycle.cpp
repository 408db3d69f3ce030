#include "doctest.h"

#include "coverage.hpp"
#include "cyclescrub/four_cycle.hpp"
#include "cyclescrub/generators.hpp"

using namespace cyclescrub;

namespace {

// Union over slices of the slice 4-cycles, in global ids.
std::set<Cycle> slice_cycles(const TripartiteGraph& tg, const SliceAssignment& a) {
  std::set<Cycle> out;
  for (const auto& sl : SliceFamily(tg, a).materialize_all_serial()) {
    for (const auto& c : ref::cycle_set(sl.graph.graph(), 4)) {
      Cycle g;
      for (Vertex v : c) g.push_back(sl.global[v]);
      out.insert(canonical_cycle(g));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("owner slices") {
  CHECK(owner_slices(SliceIndex{1, 2, 0}, 3) == std::vector<SliceIndex>{{1, 2, 0}});
  const auto s = owner_slices(SidePair{Part::A, Part::C, 2, 1}, 3);
  CHECK(s == std::vector<SliceIndex>{{2, 0, 1}, {2, 1, 1}, {2, 2, 1}});
}

TEST_CASE("two-path index sides") {
  const auto tg = gen_random_tripartite(60, 7, 1);
  const auto a = random_slice_assignment(tg, 0.1, 1);
  const auto ia = build_two_path_index(tg, a, Part::A);
  CHECK((ia.left == Part::B && ia.right == Part::C));
  const auto ib = build_two_path_index(tg, a, Part::B);
  CHECK((ib.left == Part::A && ib.right == Part::C));
  const auto ic = build_two_path_index(tg, a, Part::C);
  CHECK((ic.left == Part::A && ic.right == Part::B));
  // Every stored two-path is real and bucket-consistent.
  for (const auto& [key, mids] : ia.paths_left) {
    const auto [x, y, bucket] = key;
    CHECK(x < y);
    CHECK(a.index[x] == a.index[y]);
    for (Vertex b : mids) {
      CHECK(tg.part(b) == Part::B);
      CHECK(a.index[b] == bucket);
      CHECK(tg.graph().has_edge(x, b));
      CHECK(tg.graph().has_edge(y, b));
    }
  }
}

TEST_CASE("listing equals the per-slice brute force with no duplicates") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto tg = gen_random_tripartite(60 + 6 * seed, 8, seed);
    const auto a = random_slice_assignment(tg, 0.08, seed + 1);
    const auto listed = list_slice_4cycles(tg, a);
    std::set<Cycle> got;
    for (const auto& lc : listed) {
      CHECK(got.insert(lc.cycle).second);
      // The cycle lies in every slice its owner names.
      for (const SliceIndex& idx : owner_slices(lc.owner, a.per_side)) {
        for (Vertex v : lc.cycle) CHECK(a.index[v] == idx.of(tg.part(v)));
      }
    }
    CHECK(got == slice_cycles(tg, a));
  }
}

TEST_CASE("listing with a single slice finds every 4-cycle") {
  const auto tg = gen_random_tripartite(45, 9, 3);
  SliceAssignment a;
  a.per_side = 1;
  a.index.assign(tg.vertex_count(), 0);
  const auto listed = list_slice_4cycles(tg, a);
  CHECK(listed.size() == ref::cycle_set(tg.graph(), 4).size());
}

TEST_CASE("remove-all-4cycles gives 4-cycle-free slices and exact coverage") {
  PipelineOptions o;
  o.alpha = default_alpha(kDefaultOmega);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    o.seed = seed;
    const Graph g = gen_random_bounded(64 + 20 * seed, isqrt(64 + 20 * seed), seed + 50);
    const auto report = remove_all_4cycles(g, o);
    CHECK(report.four_cycle_free);
    for (const auto& sl : report.slices.materialize_all_serial()) {
      CHECK(ref::sequence_cycle_count(sl.graph.graph(), 4) == 0);
    }
    CHECK(ref::coverage_mismatches(g, report).empty());
  }
}

TEST_CASE("remove-all-4cycles checks alpha") {
  PipelineOptions o;
  o.alpha = (3 - kDefaultOmega) / 8 + 0.01;
  CHECK_THROWS_AS(remove_all_4cycles(ref::cycle_graph(9), o), std::invalid_argument);
  o.alpha = 0.0;
  CHECK_THROWS_AS(remove_all_4cycles(ref::cycle_graph(9), o), std::invalid_argument);
}
