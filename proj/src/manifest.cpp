#include "cyclescrub/manifest.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace cyclescrub {

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json index_json(SliceIndex i) { return nlohmann::json::array({i.j, i.k, i.l}); }

}  // namespace

std::string slice_file_name(SliceIndex i) {
  return "slice_" + std::to_string(i.j) + "_" + std::to_string(i.k) + "_" + std::to_string(i.l) + ".txt";
}

nlohmann::json edges_to_json(const std::vector<Edge>& edges) {
  auto arr = nlohmann::json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

std::vector<Edge> edges_from_json(const nlohmann::json& j) {
  std::vector<Edge> out;
  for (const auto& pair : j) out.push_back(make_edge(pair.at(0).get<Vertex>(), pair.at(1).get<Vertex>()));
  return out;
}

nlohmann::json build_manifest(const RemovalReport& report, const ManifestInfo& info,
                              const std::optional<SliceAudit>& audit) {
  using nlohmann::json;
  const SliceFamily& family = report.slices;
  json m;
  m["schema_version"] = kManifestSchemaVersion;
  m["mode"] = info.mode;
  m["seed"] = report.options.seed;
  m["alpha"] = report.options.alpha;
  m["k"] = report.options.k;
  m["forced"] = report.options.force;
  m["params"] = to_json(report.params);
  m["input"] = {{"source", info.input_source},
                {"file", kInputCopyName},
                {"format", report.embedded ? "plain" : "tripartite"},
                {"n", report.embedded ? report.original_n : report.input.vertex_count()}};
  m["embedded"] = report.embedded;
  m["tripartite_n"] = report.input.vertex_count();
  m["slices_per_side"] = family.per_side();
  m["slice_count"] = family.slice_count();
  m["e_prime"] = edges_to_json(report.e_prime);
  m["e_prime_tripartite"] = edges_to_json(report.e_prime_tripartite);

  auto phases = json::array();
  for (const auto& p : report.phases) {
    phases.push_back({{"k", p.k},
                      {"pieces", p.pieces},
                      {"probes", p.probes},
                      {"removed_edges", p.removed_edges},
                      {"reported_edges", p.reported_edges},
                      {"cap_reached", p.cap_reached}});
  }
  m["stats"] = {{"phases", phases},
                {"cap_reached", report.cap_reached},
                {"scrubbed_edges", family.base().graph().edge_count()},
                {"input_edges", report.input.graph().edge_count()},
                {"cleanup_removed", report.cleanup_removed}};

  std::map<std::size_t, const SliceStats*> audited;
  if (audit) {
    for (const auto& st : audit->slices) audited[family.flat(st.index)] = &st;
  }
  auto slices = json::array();
  for (std::size_t f = 0; f < family.slice_count(); ++f) {
    const Slice s = family.slice(f);
    if (s.graph.graph().edge_count() == 0) continue;
    json entry = {{"index", index_json(s.index)},
                  {"file", slice_file_name(s.index)},
                  {"vertices", s.global.size()},
                  {"edges", s.graph.graph().edge_count()},
                  {"vertex_map", s.global}};
    if (auto it = audited.find(f); it != audited.end()) {
      entry["max_degree"] = it->second->max_degree;
      entry["cycles"] = it->second->cycles;
    }
    slices.push_back(std::move(entry));
  }
  m["slices"] = std::move(slices);
  m["four_cycle_free"] = report.four_cycle_free;
  m["listed_four_cycles"] = report.listed_four_cycles;
  if (audit) {
    m["audit"] = {{"k", audit->k},
                  {"total_cycles", audit->total_cycles},
                  {"max_slice_vertices", audit->max_slice_vertices},
                  {"max_slice_degree", audit->max_slice_degree},
                  {"audited_slices", audit->slices.size()}};
  } else {
    m["audit"] = nullptr;
  }
  m["timestamp"] = utc_now();
  return m;
}

nlohmann::json write_scrub_output(const std::filesystem::path& dir, const ScrubInput& input,
                                  const RemovalReport& report, const ManifestInfo& info,
                                  const std::optional<SliceAudit>& audit) {
  std::filesystem::create_directories(dir);
  std::visit([&](const auto& g) { write_graph_file(g, dir / kInputCopyName); }, input);
  const SliceFamily& family = report.slices;
  for (std::size_t f = 0; f < family.slice_count(); ++f) {
    const Slice s = family.slice(f);
    if (s.graph.graph().edge_count() == 0) continue;
    write_graph_file(s.graph, dir / slice_file_name(s.index));
  }
  auto manifest = build_manifest(report, info, audit);
  write_text_file(dir / kManifestName, manifest.dump(2) + "\n");
  return manifest;
}

nlohmann::json strip_timestamp(nlohmann::json manifest) {
  manifest.erase("timestamp");
  return manifest;
}

}  // namespace cyclescrub
