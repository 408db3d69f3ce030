#include "cyclescrub/four_cycle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cyclescrub {

namespace {

std::pair<Part, Part> sides_of(Part center) {
  switch (center) {
    case Part::A: return {Part::B, Part::C};
    case Part::B: return {Part::A, Part::C};
    case Part::C: return {Part::A, Part::B};
  }
  return {Part::B, Part::C};
}

void set_index(SliceIndex& idx, Part p, std::uint32_t value) {
  if (p == Part::A) idx.j = value;
  else if (p == Part::B) idx.k = value;
  else idx.l = value;
}

void index_side(const TripartiteGraph& tg, const SliceAssignment& assignment, Part center, Part side,
                std::map<TwoPathIndex::PathKey, std::vector<Vertex>>& paths) {
  const Graph& g = tg.graph();
  std::vector<Vertex> centers;
  for (Vertex b = 0; b < tg.vertex_count(); ++b) {
    if (tg.part(b) != side) continue;
    centers.clear();
    for (Vertex a : g.neighbors(b)) {
      if (tg.part(a) == center) centers.push_back(a);
    }
    for (std::size_t x = 0; x < centers.size(); ++x) {
      for (std::size_t y = x + 1; y < centers.size(); ++y) {
        if (assignment.index[centers[x]] != assignment.index[centers[y]]) continue;
        paths[{centers[x], centers[y], assignment.index[b]}].push_back(b);
      }
    }
  }
}

void summarize_side(const SliceAssignment& assignment,
                    const std::map<TwoPathIndex::PathKey, std::vector<Vertex>>& paths,
                    std::map<TwoPathIndex::CenterPair, std::vector<std::uint32_t>>& slices,
                    std::map<TwoPathIndex::BucketPair, std::vector<TwoPathIndex::CenterPair>>& multi) {
  for (const auto& [key, list] : paths) {
    const auto& [a, a2, bucket] = key;
    slices[{a, a2}].push_back(bucket);
    if (list.size() >= 2) multi[{assignment.index[a], bucket}].push_back({a, a2});
  }
}

// 2+2 cycles: both witnesses on the same side bucket.
void list_two_two(const TwoPathIndex& index, Part side,
                  const std::map<TwoPathIndex::PathKey, std::vector<Vertex>>& paths,
                  const std::map<TwoPathIndex::BucketPair, std::vector<TwoPathIndex::CenterPair>>& multi,
                  std::vector<ListedCycle>& out) {
  const bool center_first = index.center < side;
  for (const auto& [buckets, pairs] : multi) {
    SidePair owner;
    owner.first = center_first ? index.center : side;
    owner.second = center_first ? side : index.center;
    owner.first_index = center_first ? buckets.first : buckets.second;
    owner.second_index = center_first ? buckets.second : buckets.first;
    for (const auto& [a, a2] : pairs) {
      const auto& list = paths.at({a, a2, buckets.second});
      for (std::size_t x = 0; x < list.size(); ++x) {
        for (std::size_t y = x + 1; y < list.size(); ++y) {
          const std::array<Vertex, 4> c{a, list[x], a2, list[y]};
          out.push_back({owner, canonical_cycle(c)});
        }
      }
    }
  }
}

void list_center_pass(const TripartiteGraph& tg, const SliceAssignment& assignment, Part center,
                      std::vector<ListedCycle>& out) {
  const TwoPathIndex index = build_two_path_index(tg, assignment, center);
  // A owns A-B and A-C cycles, B owns B-C cycles.
  if (center == Part::A) list_two_two(index, index.left, index.paths_left, index.multi_left, out);
  if (center != Part::C) list_two_two(index, index.right, index.paths_right, index.multi_right, out);

  // 2+1+1 cycles with the center side doubled.
  for (const auto& [pair, left_buckets] : index.slices_left) {
    auto rit = index.slices_right.find(pair);
    if (rit == index.slices_right.end()) continue;
    const auto [a, a2] = pair;
    for (std::uint32_t kb : left_buckets) {
      const auto& bs = index.paths_left.at({a, a2, kb});
      for (std::uint32_t lb : rit->second) {
        const auto& cs = index.paths_right.at({a, a2, lb});
        SliceIndex owner;
        set_index(owner, center, assignment.index[a]);
        set_index(owner, index.left, kb);
        set_index(owner, index.right, lb);
        for (Vertex b : bs) {
          for (Vertex c : cs) {
            const std::array<Vertex, 4> cyc{a, b, a2, c};
            out.push_back({owner, canonical_cycle(cyc)});
          }
        }
      }
    }
  }
}

void sort_unique(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

void clean_up(RemovalReport& report) {
  SliceFamily& family = report.slices;
  const auto cycles = list_slice_4cycles(family.base(), family.assignment());
  report.listed_four_cycles = cycles.size();

  std::map<std::size_t, std::vector<Edge>> doomed;
  for (const auto& lc : cycles) {
    const auto& c = lc.cycle;
    const std::array<Edge, 4> edges{make_edge(c[0], c[1]), make_edge(c[1], c[2]), make_edge(c[2], c[3]),
                                    make_edge(c[3], c[0])};
    for (SliceIndex idx : owner_slices(lc.owner, family.per_side())) {
      auto& list = doomed[family.flat(idx)];
      list.insert(list.end(), edges.begin(), edges.end());
    }
  }

  std::vector<std::pair<std::size_t, std::vector<Edge>>> work(doomed.begin(), doomed.end());
  std::vector<std::vector<Edge>> found(work.size());
  const auto count = static_cast<std::int64_t>(work.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    auto& [flat, edges] = work[i];
    sort_unique(edges);
    const Slice slice = family.slice(flat);
    const Graph& g = slice.graph.graph();
    auto local = [&](Vertex v) {
      return static_cast<Vertex>(std::lower_bound(slice.global.begin(), slice.global.end(), v) -
                                 slice.global.begin());
    };
    for (const Edge& e : edges) {
      auto nu = g.neighbors(local(e.u));
      auto nv = g.neighbors(local(e.v));
      std::vector<Vertex> common;
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
      for (Vertex w : common) {
        const Vertex gw = slice.global[w];
        found[i].push_back(e);
        found[i].push_back(make_edge(e.u, gw));
        found[i].push_back(make_edge(e.v, gw));
      }
    }
  }

  std::vector<Edge> added;
  for (std::size_t i = 0; i < work.size(); ++i) {
    added.insert(added.end(), found[i].begin(), found[i].end());
    report.cleanup_removed += work[i].second.size();
    family.remove_edges(family.index_of(work[i].first), work[i].second);
  }
  added.insert(added.end(), report.e_prime_tripartite.begin(), report.e_prime_tripartite.end());
  sort_unique(added);
  report.e_prime_tripartite = std::move(added);
  std::vector<Edge> mapped;
  mapped.reserve(report.e_prime_tripartite.size());
  for (const Edge& e : report.e_prime_tripartite) mapped.push_back(report.to_input(e));
  sort_unique(mapped);
  report.e_prime = std::move(mapped);
  report.four_cycle_free = true;
}

void check_alpha_ceiling(const PipelineOptions& options) {
  const double ceiling = (3.0 - options.config.omega) / 8.0;
  if (!(options.alpha > 0.0 && options.alpha < ceiling)) {
    throw std::invalid_argument("alpha must lie in (0, (3 - omega) / 8) = (0, " + std::to_string(ceiling) + ")");
  }
}

}  // namespace

std::vector<SliceIndex> owner_slices(const CycleOwner& owner, std::size_t per_side) {
  if (const auto* idx = std::get_if<SliceIndex>(&owner)) return {*idx};
  const auto& sp = std::get<SidePair>(owner);
  const Part free_part = static_cast<Part>(3 - static_cast<int>(sp.first) - static_cast<int>(sp.second));
  std::vector<SliceIndex> out;
  out.reserve(per_side);
  for (std::uint32_t i = 0; i < per_side; ++i) {
    SliceIndex idx;
    set_index(idx, sp.first, sp.first_index);
    set_index(idx, sp.second, sp.second_index);
    set_index(idx, free_part, i);
    out.push_back(idx);
  }
  return out;
}

TwoPathIndex build_two_path_index(const TripartiteGraph& tg, const SliceAssignment& assignment, Part center) {
  TwoPathIndex index;
  index.center = center;
  std::tie(index.left, index.right) = sides_of(center);
  index_side(tg, assignment, center, index.left, index.paths_left);
  index_side(tg, assignment, center, index.right, index.paths_right);
  summarize_side(assignment, index.paths_left, index.slices_left, index.multi_left);
  summarize_side(assignment, index.paths_right, index.slices_right, index.multi_right);
  return index;
}

std::vector<ListedCycle> list_slice_4cycles(const TripartiteGraph& tg, const SliceAssignment& assignment) {
  std::vector<ListedCycle> out;
  for (Part center : {Part::A, Part::B, Part::C}) list_center_pass(tg, assignment, center, out);
  std::sort(out.begin(), out.end());
  return out;
}

RemovalReport remove_all_4cycles(const Graph& g, const PipelineOptions& options) {
  check_alpha_ceiling(options);
  PipelineOptions opts = options;
  opts.k = 4;
  RemovalReport report = remove_most_k_cycles(g, opts);
  clean_up(report);
  return report;
}

RemovalReport remove_all_4cycles(const TripartiteGraph& tg, const PipelineOptions& options) {
  check_alpha_ceiling(options);
  PipelineOptions opts = options;
  opts.k = 4;
  RemovalReport report = remove_most_k_cycles(tg, opts);
  clean_up(report);
  return report;
}

}  // namespace cyclescrub
