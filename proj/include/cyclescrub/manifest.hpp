#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include "cyclescrub/graph_io.hpp"
#include "cyclescrub/slicing.hpp"
#include "json.hpp"

namespace cyclescrub {

inline constexpr int kManifestSchemaVersion = 1;
inline constexpr const char* kManifestName = "manifest.json";
inline constexpr const char* kInputCopyName = "input.txt";

/// The graph a scrub run started from, as read.
using ScrubInput = std::variant<Graph, TripartiteGraph>;

struct ManifestInfo {
  std::string mode;          // "most" or "all4"
  std::string input_source;  // path as given on the command line
};

std::string slice_file_name(SliceIndex i);

nlohmann::json edges_to_json(const std::vector<Edge>& edges);
std::vector<Edge> edges_from_json(const nlohmann::json& j);

/// Manifest document; slices with at least one edge are listed with their
/// file names and global vertex maps. `timestamp` is the only
/// run-dependent field.
nlohmann::json build_manifest(const RemovalReport& report, const ManifestInfo& info,
                              const std::optional<SliceAudit>& audit);

/// Writes input.txt, one slice_j_k_l.txt per listed slice (tripartite
/// format, local ids) and manifest.json into `dir`, each atomically.
/// Returns the manifest.
nlohmann::json write_scrub_output(const std::filesystem::path& dir, const ScrubInput& input,
                                  const RemovalReport& report, const ManifestInfo& info,
                                  const std::optional<SliceAudit>& audit);

/// Copy without the timestamp, for run-to-run comparison.
nlohmann::json strip_timestamp(nlohmann::json manifest);

}  // namespace cyclescrub
