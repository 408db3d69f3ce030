#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

namespace cyclescrub {

inline constexpr double kDefaultOmega = 2.3728;

/// User-facing knobs. Unset optionals fall back to the formulas in
/// derive_params; explicit values always win.
struct DensePieceConfig {
  int k = 4;
  double omega = kDefaultOmega;
  std::optional<double> epsilon;  // default (3 - omega) / 8
  std::optional<double> gamma;    // default (omega - 1) / 4 + epsilon
  std::optional<std::uint64_t> path_samples;
  std::optional<std::uint64_t> pair_samples;
  std::optional<std::uint64_t> hit_threshold;
  std::optional<std::uint64_t> density_floor;
  std::optional<std::uint64_t> iteration_cap;
  bool exact_fallback = true;

  friend bool operator==(const DensePieceConfig&, const DensePieceConfig&) = default;
};

/// Concrete parameters for a graph on n vertices.
struct DensePieceParams {
  std::size_t n = 0;
  int k = 4;
  double omega = kDefaultOmega;
  double epsilon = 0;
  double gamma = 0;
  double beta = 0;
  std::uint64_t path_samples = 1;
  std::uint64_t pair_samples = 1;
  std::uint64_t hit_threshold = 1;
  std::uint64_t density_floor = 1;
  std::uint64_t iteration_cap = 1;
  bool exact_fallback = true;
  /// Max degree the dense-piece operations accept; isqrt(n) unless the
  /// caller knows better (the tripartite embedding doubles degrees).
  std::size_t degree_bound = 0;

  friend bool operator==(const DensePieceParams&, const DensePieceParams&) = default;
};

/// Throws std::invalid_argument on out-of-range settings
/// (k < 3, omega outside [2, 3), epsilon outside (0, (3-omega)/4),
/// gamma outside [0, 1/2), zero counts).
DensePieceParams derive_params(const DensePieceConfig& config, std::size_t n);

/// Flat `key = value` text, '#' starts a comment. Unknown keys are errors.
DensePieceConfig parse_config(std::istream& in);
DensePieceConfig parse_config_text(const std::string& text);
std::string format_config(const DensePieceConfig& config);

nlohmann::json to_json(const DensePieceParams& params);

}  // namespace cyclescrub
