#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace cyclescrub {

struct VerifyResult {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  bool ok() const { return violations.empty(); }
};

/// Replays a scrub output directory against the oracles: E' soundness,
/// per-edge coverage, no invented slice edges, 4-cycle-freeness when the
/// manifest claims it, and recorded audit counts.
VerifyResult verify_manifest(const std::filesystem::path& manifest_path);

/// Re-runs the gadget named in a reduction certificate file, compares the
/// result with the recorded output graph and checks the counting or
/// existence identity with the oracles.
VerifyResult verify_certificate(const std::filesystem::path& certificate_path);

}  // namespace cyclescrub
