// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "cyclescrub/bit_matrix.hpp"
#include "cyclescrub/generators.hpp"
#include "cyclescrub/oracle.hpp"
#include "cyclescrub/slicing.hpp"

using namespace cyclescrub;

namespace {

BitMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng.below(8) == 0) m.set(i, j);
  return m;
}

const RemovalReport& report_for(std::size_t n) {
  static std::map<std::size_t, RemovalReport> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    PipelineOptions o;
    o.alpha = default_alpha(kDefaultOmega);
    o.seed = 1;
    it = cache.emplace(n, remove_most_k_cycles(gen_random_bounded(n, isqrt(n), 1), o)).first;
  }
  return it->second;
}

template <BitMatrix (*F)(const BitMatrix&, const BitMatrix&)>
void bm_matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(F(a, b));
}

template <EdgeFlags (*F)(const Graph&)>
void bm_edge_triangle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_random_bounded(n, 2 * isqrt(n), 3);
  for (auto _ : state) benchmark::DoNotOptimize(F(g));
}

template <std::uint64_t (*F)(const Graph&, int)>
void bm_count_cycles(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_random_bounded(n, 8, 4);
  for (auto _ : state) benchmark::DoNotOptimize(F(g, 6));
}

void bm_materialize(benchmark::State& state) {
  const auto& r = report_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(r.slices.materialize_all());
}

void bm_materialize_serial(benchmark::State& state) {
  const auto& r = report_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(r.slices.materialize_all_serial());
}

template <SliceAudit (*F)(const SliceFamily&, int)>
void bm_audit(benchmark::State& state) {
  const auto& r = report_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(F(r.slices, 5));
}

}  // namespace

BENCHMARK(bm_matmul<bool_matmul_serial>)->Name("bool_matmul/serial")->Arg(256)->Arg(1024);
BENCHMARK(bm_matmul<bool_matmul>)->Name("bool_matmul/parallel")->Arg(256)->Arg(1024)->UseRealTime();
BENCHMARK(bm_edge_triangle<all_edge_triangle_serial>)->Name("all_edge_triangle/serial")->Arg(4096)->Arg(8192);
BENCHMARK(bm_edge_triangle<all_edge_triangle>)->Name("all_edge_triangle/parallel")->Arg(4096)->Arg(8192)->UseRealTime();
BENCHMARK(bm_count_cycles<count_k_cycles_serial>)->Name("count_6_cycles/serial")->Arg(512)->Arg(2048);
BENCHMARK(bm_count_cycles<count_k_cycles>)->Name("count_6_cycles/parallel")->Arg(512)->Arg(2048)->UseRealTime();
BENCHMARK(bm_materialize_serial)->Name("materialize_all/serial")->Arg(256)->Arg(1024);
BENCHMARK(bm_materialize)->Name("materialize_all/parallel")->Arg(256)->Arg(1024)->UseRealTime();
BENCHMARK(bm_audit<audit_slices_serial>)->Name("audit_slices/serial")->Arg(256)->Arg(1024);
BENCHMARK(bm_audit<audit_slices>)->Name("audit_slices/parallel")->Arg(256)->Arg(1024)->UseRealTime();

BENCHMARK_MAIN();
