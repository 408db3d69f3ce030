#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cyclescrub/dense_piece.hpp"
#include "cyclescrub/graph.hpp"
#include "cyclescrub/params.hpp"

namespace cyclescrub {

/// Bucket indices (j, k, l) of the A, B and C sides.
struct SliceIndex {
  std::uint32_t j = 0;
  std::uint32_t k = 0;
  std::uint32_t l = 0;

  std::uint32_t of(Part p) const { return p == Part::A ? j : p == Part::B ? k : l; }
  friend auto operator<=>(const SliceIndex&, const SliceIndex&) = default;
};

/// max(1, floor(n^(1/2 - alpha))).
std::size_t slices_per_side(std::size_t n, double alpha);

struct SliceAssignment {
  std::size_t per_side = 1;
  std::vector<std::uint32_t> index;  // bucket of each vertex within its own side

  friend bool operator==(const SliceAssignment&, const SliceAssignment&) = default;
};

/// Independent uniform bucket per vertex. Requires 0 < alpha < 1/2.
SliceAssignment random_slice_assignment(const TripartiteGraph& tg, double alpha, std::uint64_t seed);

/// Tripartite subgraph induced on A_j u B_k u C_l. Local vertex i is
/// global[i]; local ids follow increasing global id.
struct Slice {
  SliceIndex index;
  TripartiteGraph graph;
  std::vector<Vertex> global;

  Edge to_global(Edge e) const { return make_edge(global[e.u], global[e.v]); }
};

/// Induced slice of tg; no edge removals applied.
Slice materialize_slice(const TripartiteGraph& tg, const SliceAssignment& assignment, SliceIndex index);

/// All s^3 slices of one graph, built on demand. Per-slice edge removals
/// (from the 4-cycle clean-up) are stored sparsely and applied when a slice
/// is materialized.
class SliceFamily {
 public:
  SliceFamily() = default;
  SliceFamily(TripartiteGraph base, SliceAssignment assignment);

  const TripartiteGraph& base() const { return base_; }
  const SliceAssignment& assignment() const { return assignment_; }
  std::size_t per_side() const { return assignment_.per_side; }
  std::size_t slice_count() const { return per_side() * per_side() * per_side(); }

  std::size_t flat(SliceIndex i) const { return (i.j * per_side() + i.k) * per_side() + i.l; }
  SliceIndex index_of(std::size_t flat) const;

  /// Sorted members of bucket `i` of side `p`.
  const std::vector<Vertex>& bucket(Part p, std::uint32_t i) const {
    return buckets_[static_cast<int>(p)][i];
  }
  std::uint32_t bucket_of(Vertex v) const { return assignment_.index[v]; }

  Slice slice(SliceIndex i) const;
  Slice slice(std::size_t flat) const { return slice(index_of(flat)); }

  /// Every slice, in flat order. OpenMP over slices.
  std::vector<Slice> materialize_all() const;
  std::vector<Slice> materialize_all_serial() const;

  /// Removes global edges from one slice only.
  void remove_edges(SliceIndex i, std::span<const Edge> edges);
  const std::map<std::size_t, std::vector<Edge>>& removals() const { return removals_; }

 private:
  TripartiteGraph base_;
  SliceAssignment assignment_;
  std::array<std::vector<std::vector<Vertex>>, 3> buckets_;
  std::map<std::size_t, std::vector<Edge>> removals_;
};

struct PhaseStats {
  int k = 0;
  std::size_t pieces = 0;
  std::size_t probes = 0;
  std::size_t removed_edges = 0;
  std::size_t reported_edges = 0;
  bool cap_reached = false;
};

struct PipelineOptions {
  int k = 4;
  double alpha = 0.0;
  DensePieceConfig config;
  std::uint64_t seed = 0;
  /// Skip the max-degree precondition (the dense-piece bound is then the
  /// actual max degree).
  bool force = false;
};

/// Default alpha for both pipelines: half of the 4-cycle-free ceiling.
double default_alpha(double omega);

struct RemovalReport {
  std::size_t original_n = 0;
  bool embedded = false;      // input was a plain graph
  TripartiteGraph input;      // the tripartite graph the pipeline ran on
  std::vector<Edge> e_prime;  // in input ids
  std::vector<Edge> e_prime_tripartite;
  SliceFamily slices;         // over the scrubbed tripartite graph
  std::vector<PhaseStats> phases;
  DensePieceParams params;    // as derived for the largest k
  PipelineOptions options;
  bool cap_reached = false;
  bool four_cycle_free = false;
  std::size_t listed_four_cycles = 0;
  std::size_t cleanup_removed = 0;

  /// Maps a tripartite edge to the input graph.
  Edge to_input(Edge e) const {
    return embedded ? make_edge(embedded_original(e.u, original_n), embedded_original(e.v, original_n)) : e;
  }
};

/// Embeds a plain graph (max degree <= isqrt(n) unless forced), then as below.
RemovalReport remove_most_k_cycles(const Graph& g, const PipelineOptions& options);
/// Dense-piece removal for k' = 4..k on the tripartite graph, then a random
/// slice assignment of the scrubbed graph.
RemovalReport remove_most_k_cycles(const TripartiteGraph& tg, const PipelineOptions& options);

struct SliceStats {
  SliceIndex index;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  std::vector<std::uint64_t> cycles;  // cycles[i] counts (4 + i)-cycles
  friend bool operator==(const SliceStats&, const SliceStats&) = default;
};

struct SliceAudit {
  int k = 4;
  std::vector<SliceStats> slices;  // slices with at least one vertex, flat order
  std::vector<std::uint64_t> total_cycles;
  std::size_t max_slice_vertices = 0;
  std::size_t max_slice_degree = 0;
  friend bool operator==(const SliceAudit&, const SliceAudit&) = default;
};

/// Brute-force k'-cycle counts for k' = 4..k in every slice (k <= 8).
SliceAudit audit_slices(const SliceFamily& family, int k);
SliceAudit audit_slices_serial(const SliceFamily& family, int k);

}  // namespace cyclescrub
