#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyclescrub/params.hpp"

namespace cyclescrub {

/// Fixed CSV header. Timing columns are wall_ms and rate_per_s; all other
/// columns depend only on (n, seed, options).
extern const char* const kBenchHeader;

struct BenchOptions {
  double alpha = 0.0;  // 0 selects default_alpha(config.omega)
  DensePieceConfig config;
  int jobs = 1;        // > 1 marks timings unreliable
};

/// For each (n, seed): a random graph with max degree isqrt(n), then one row
/// per phase (remove_most, list_4cycles, audit, remove_all_4cycles).
void bench_pipeline(const std::vector<std::size_t>& sizes, const std::vector<std::uint64_t>& seeds,
                    const BenchOptions& options, std::ostream& csv);

}  // namespace cyclescrub
