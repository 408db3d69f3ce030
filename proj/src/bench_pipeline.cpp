#include "cyclescrub/bench_pipeline.hpp"

#include <chrono>
#include <ostream>
#include <stdexcept>

#include "cyclescrub/four_cycle.hpp"
#include "cyclescrub/generators.hpp"
#include "cyclescrub/rng.hpp"

namespace cyclescrub {

const char* const kBenchHeader =
    "phase,n,seed,wall_ms,input_edges,removed_edges,pieces,e_prime,slices_per_side,nonempty_slices,"
    "max_slice_vertices,max_slice_degree,four_cycles,rate_per_s,timing_reliable";

namespace {

constexpr std::uint64_t kBenchStream = 0x62656e63;

struct SliceSummary {
  std::size_t nonempty = 0;
  std::size_t max_vertices = 0;
  std::size_t max_degree = 0;
};

SliceSummary summarize(const SliceFamily& family) {
  SliceSummary s;
  for (std::size_t f = 0; f < family.slice_count(); ++f) {
    const Slice slice = family.slice(f);
    const Graph& g = slice.graph.graph();
    if (g.edge_count() == 0) continue;
    ++s.nonempty;
    s.max_vertices = std::max(s.max_vertices, g.vertex_count());
    s.max_degree = std::max(s.max_degree, g.max_degree());
  }
  return s;
}

struct Row {
  const char* phase;
  std::size_t n;
  std::uint64_t seed;
  double wall_ms;
  std::size_t input_edges, removed_edges, pieces, e_prime, per_side;
  SliceSummary slices;
  std::uint64_t four_cycles;
};

void emit(std::ostream& csv, const Row& r, bool reliable) {
  const double rate = r.wall_ms > 0 ? static_cast<double>(r.four_cycles) / (r.wall_ms / 1000.0) : 0.0;
  csv << r.phase << ',' << r.n << ',' << r.seed << ',' << r.wall_ms << ',' << r.input_edges << ','
      << r.removed_edges << ',' << r.pieces << ',' << r.e_prime << ',' << r.per_side << ',' << r.slices.nonempty
      << ',' << r.slices.max_vertices << ',' << r.slices.max_degree << ',' << r.four_cycles << ',' << rate << ','
      << (reliable ? 1 : 0) << '\n';
}

template <class F>
auto timed(double& ms, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  auto out = f();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace

void bench_pipeline(const std::vector<std::size_t>& sizes, const std::vector<std::uint64_t>& seeds,
                    const BenchOptions& options, std::ostream& csv) {
  csv << kBenchHeader << '\n';
  const bool reliable = options.jobs <= 1;
  for (std::size_t n : sizes) {
    if (n > 4096) throw std::invalid_argument("bench sizes are limited to n <= 4096");
    for (std::uint64_t seed : seeds) {
      const Graph g = gen_random_bounded(n, isqrt(n), derive_seed(seed, kBenchStream));
      PipelineOptions po;
      po.k = 4;
      po.alpha = options.alpha > 0 ? options.alpha : default_alpha(options.config.omega);
      po.config = options.config;
      po.seed = seed;

      Row most{"remove_most", n, seed, 0, g.edge_count(), 0, 0, 0, 0, {}, 0};
      const RemovalReport report = timed(most.wall_ms, [&] { return remove_most_k_cycles(g, po); });
      for (const auto& p : report.phases) {
        most.removed_edges += p.removed_edges;
        most.pieces += p.pieces;
      }
      most.e_prime = report.e_prime.size();
      most.per_side = report.slices.per_side();
      most.slices = summarize(report.slices);
      emit(csv, most, reliable);

      Row list = most;
      list.phase = "list_4cycles";
      const auto cycles = timed(list.wall_ms, [&] {
        return list_slice_4cycles(report.slices.base(), report.slices.assignment());
      });
      list.four_cycles = cycles.size();
      emit(csv, list, reliable);

      Row audit = most;
      audit.phase = "audit";
      const auto a = timed(audit.wall_ms, [&] { return audit_slices(report.slices, 4); });
      audit.four_cycles = a.total_cycles.at(0);
      emit(csv, audit, reliable);

      Row all{"remove_all_4cycles", n, seed, 0, g.edge_count(), 0, 0, 0, 0, {}, 0};
      const RemovalReport clean = timed(all.wall_ms, [&] { return remove_all_4cycles(g, po); });
      for (const auto& p : clean.phases) {
        all.removed_edges += p.removed_edges;
        all.pieces += p.pieces;
      }
      all.removed_edges += clean.cleanup_removed;
      all.e_prime = clean.e_prime.size();
      all.per_side = clean.slices.per_side();
      all.slices = summarize(clean.slices);
      all.four_cycles = clean.listed_four_cycles;
      emit(csv, all, reliable);
    }
  }
}

}  // namespace cyclescrub
