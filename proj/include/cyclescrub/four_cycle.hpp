#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "cyclescrub/graph.hpp"
#include "cyclescrub/oracle.hpp"
#include "cyclescrub/slicing.hpp"

namespace cyclescrub {

/// Two buckets on two sides (first < second). A cycle using only these two
/// sides lies in every slice that contains both buckets.
struct SidePair {
  Part first = Part::A;
  Part second = Part::B;
  std::uint32_t first_index = 0;
  std::uint32_t second_index = 0;
  friend auto operator<=>(const SidePair&, const SidePair&) = default;
};

using CycleOwner = std::variant<SliceIndex, SidePair>;

/// Slices containing everything the owner refers to.
std::vector<SliceIndex> owner_slices(const CycleOwner& owner, std::size_t per_side);

struct ListedCycle {
  CycleOwner owner;
  Cycle cycle;  // canonical, global ids
  friend auto operator<=>(const ListedCycle&, const ListedCycle&) = default;
};

/// Two-paths a - b - a' with a, a' on the center side in one bucket and b on
/// a side slice. For center A the left side is B and the right side is C;
/// for center B they are A and C; for center C they are A and B.
struct TwoPathIndex {
  using CenterPair = std::pair<Vertex, Vertex>;                    // a < a'
  using PathKey = std::tuple<Vertex, Vertex, std::uint32_t>;      // (a, a', side bucket)
  using BucketPair = std::pair<std::uint32_t, std::uint32_t>;     // (center bucket, side bucket)

  Part center = Part::A;
  Part left = Part::B;
  Part right = Part::C;
  std::map<PathKey, std::vector<Vertex>> paths_left, paths_right;
  std::map<CenterPair, std::vector<std::uint32_t>> slices_left, slices_right;
  std::map<BucketPair, std::vector<CenterPair>> multi_left, multi_right;
};

TwoPathIndex build_two_path_index(const TripartiteGraph& tg, const SliceAssignment& assignment, Part center);

/// Every 4-cycle lying inside some slice, once each, sorted. 2+2 cycles
/// (two vertices on each of two sides) are owned by a SidePair, the rest by
/// the slice that holds them.
std::vector<ListedCycle> list_slice_4cycles(const TripartiteGraph& tg, const SliceAssignment& assignment);

/// remove_most_k_cycles with k = 4 followed by a clean-up that deletes every
/// edge of every in-slice 4-cycle from its slices, first adding to E' all
/// edges of in-slice triangles through the deleted edges. Requires
/// 0 < alpha < (3 - omega) / 8.
RemovalReport remove_all_4cycles(const Graph& g, const PipelineOptions& options);
RemovalReport remove_all_4cycles(const TripartiteGraph& tg, const PipelineOptions& options);

}  // namespace cyclescrub
