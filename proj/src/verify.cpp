#include "cyclescrub/verify.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cyclescrub/graph_io.hpp"
#include "cyclescrub/manifest.hpp"
#include "cyclescrub/oracle.hpp"
#include "cyclescrub/reductions.hpp"
#include "json.hpp"

namespace cyclescrub {

namespace {

nlohmann::json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return nlohmann::json::parse(in);
}

std::string edge_text(Edge e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

std::string cycle_text(const Cycle& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
  return s + ")";
}

bool has_edge_sorted(const std::vector<Edge>& sorted, Edge e) {
  return std::binary_search(sorted.begin(), sorted.end(), e);
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& file) {
  std::filesystem::path p(file);
  return p.is_absolute() ? p : base / p;
}

}  // namespace

VerifyResult verify_manifest(const std::filesystem::path& manifest_path) {
  VerifyResult r;
  const auto m = load_json(manifest_path);
  const auto dir = manifest_path.parent_path();
  if (m.at("schema_version").get<int>() != kManifestSchemaVersion) {
    r.violations.push_back("unsupported schema_version " + m.at("schema_version").dump());
    return r;
  }

  const auto& input = m.at("input");
  const auto input_file = resolve(dir, input.at("file").get<std::string>());
  const bool embedded = m.at("embedded").get<bool>();
  Graph g;
  TripartiteGraph tg;
  if (input.at("format").get<std::string>() == "plain") {
    g = read_graph(input_file);
    if (!embedded) {
      r.violations.push_back("plain input must be embedded");
      return r;
    }
    tg = tripartite_embed(g);
  } else {
    tg = read_tripartite(input_file);
    g = tg.graph();
  }
  const std::size_t n_in = g.vertex_count();
  auto to_input = [&](Edge e) {
    return embedded ? make_edge(embedded_original(e.u, n_in), embedded_original(e.v, n_in)) : e;
  };

  const EdgeFlags g_tri = all_edge_triangle(g);
  const EdgeFlags tg_tri = all_edge_triangle(tg.graph());

  // E' soundness.
  auto e_prime = edges_from_json(m.at("e_prime"));
  std::sort(e_prime.begin(), e_prime.end());
  for (const Edge& e : e_prime) {
    auto idx = e.u < n_in && e.v < n_in ? g.edge_index(e.u, e.v) : std::nullopt;
    if (!idx) r.violations.push_back("E' edge " + edge_text(e) + " is not an input edge");
    else if (!g_tri[*idx]) r.violations.push_back("E' edge " + edge_text(e) + " lies in no triangle");
  }
  for (const Edge& e : edges_from_json(m.at("e_prime_tripartite"))) {
    auto idx = e.u < tg.vertex_count() && e.v < tg.vertex_count() ? tg.graph().edge_index(e.u, e.v) : std::nullopt;
    if (!idx) r.violations.push_back("E' tripartite edge " + edge_text(e) + " is not an edge");
    else if (!tg_tri[*idx]) r.violations.push_back("E' tripartite edge " + edge_text(e) + " lies in no triangle");
  }

  const bool four_free = m.at("four_cycle_free").get<bool>();
  const int audit_k = m.at("audit").is_null() ? 0 : m.at("audit").at("k").get<int>();
  std::vector<std::uint64_t> audit_totals(static_cast<std::size_t>(std::max(0, audit_k - 3)), 0);
  std::set<Edge> covered;  // input edges with a copy in some slice triangle
  std::set<std::string> seen_files;

  for (const auto& entry : m.at("slices")) {
    const auto file = entry.at("file").get<std::string>();
    if (!seen_files.insert(file).second) r.violations.push_back("slice " + file + " listed twice");
    const auto map = entry.at("vertex_map").get<std::vector<Vertex>>();
    TripartiteGraph slice;
    try {
      slice = read_tripartite(dir / file);
    } catch (const std::exception& ex) {
      r.violations.push_back("slice " + file + ": " + ex.what());
      continue;
    }
    if (slice.vertex_count() != map.size()) {
      r.violations.push_back("slice " + file + ": vertex count differs from its vertex_map");
      continue;
    }
    bool map_ok = std::is_sorted(map.begin(), map.end()) && std::adjacent_find(map.begin(), map.end()) == map.end();
    for (std::size_t i = 0; i < map.size() && map_ok; ++i) {
      map_ok = map[i] < tg.vertex_count() && tg.part(map[i]) == slice.part(static_cast<Vertex>(i));
    }
    if (!map_ok) {
      r.violations.push_back("slice " + file + ": vertex_map is not a sorted part-preserving id list");
      continue;
    }
    auto global = [&](Edge e) { return make_edge(map[e.u], map[e.v]); };
    for (const Edge& e : slice.graph().edges()) {
      if (!tg.graph().has_edge(map[e.u], map[e.v])) {
        r.violations.push_back("slice " + file + ": edge " + edge_text(global(e)) + " is not an input edge");
      }
    }

    for (const Cycle& t : enumerate_triangles(slice.graph())) {
      for (int i = 0; i < 3; ++i) covered.insert(to_input(make_edge(map[t[i]], map[t[(i + 1) % 3]])));
    }
    if (four_free) {
      const auto cycles = enumerate_k_cycles(slice.graph(), 4);
      if (!cycles.empty()) {
        Cycle c;
        for (Vertex v : cycles.front()) c.push_back(map[v]);
        r.violations.push_back("slice " + file + " contains 4-cycle " + cycle_text(canonical_cycle(c)) + " (" +
                               std::to_string(cycles.size()) + " in total)");
      }
    }
    if (audit_k >= 4) {
      std::vector<std::uint64_t> counts;
      for (int len = 4; len <= audit_k; ++len) counts.push_back(count_k_cycles(slice.graph(), len));
      for (std::size_t i = 0; i < counts.size(); ++i) audit_totals[i] += counts[i];
      if (entry.contains("cycles") && entry.at("cycles").get<std::vector<std::uint64_t>>() != counts) {
        r.violations.push_back("slice " + file + ": recorded cycle counts differ from the oracle");
      }
    }
  }

  if (audit_k >= 4 && m.at("audit").at("total_cycles").get<std::vector<std::uint64_t>>() != audit_totals) {
    r.violations.push_back("audit totals differ from the oracle");
  }

  // Coverage: in a triangle <=> in E' or in a slice triangle.
  std::size_t checked = 0;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const bool claimed = has_edge_sorted(e_prime, edges[i]) || covered.count(edges[i]) > 0;
    if (claimed != static_cast<bool>(g_tri[i])) {
      r.violations.push_back("coverage: edge " + edge_text(edges[i]) +
                             (g_tri[i] ? " lies in a triangle but is neither in E' nor in a slice triangle"
                                       : " is claimed but lies in no triangle"));
    }
    ++checked;
  }
  r.notes.push_back("checked " + std::to_string(checked) + " input edges across " +
                    std::to_string(m.at("slices").size()) + " slice files");
  if (m.at("stats").at("cap_reached").get<bool>()) r.notes.push_back("iteration cap was reached during scrubbing");
  return r;
}

VerifyResult verify_certificate(const std::filesystem::path& certificate_path) {
  VerifyResult r;
  const auto doc = load_json(certificate_path);
  const auto dir = certificate_path.parent_path();
  const ReductionCertificate cert = certificate_from_json(doc.at("certificate"));
  const auto source_file = resolve(dir, doc.at("source").at("file").get<std::string>());

  if (cert.refused) {
    r.notes.push_back("gadget refused: " + cert.forward_map);
    if (!doc.at("output").is_null()) r.violations.push_back("refused certificate lists an output graph");
    return r;
  }
  const auto output_file = resolve(dir, doc.at("output").at("file").get<std::string>());

  auto expect_equal = [&](const Graph& rebuilt, const Graph& recorded) {
    if (!(rebuilt == recorded)) r.violations.push_back("output graph differs from a fresh run of the gadget");
  };
  auto count_identity = [&](const char* what, std::uint64_t lhs, std::uint64_t rhs) {
    if (lhs != rhs) {
      r.violations.push_back(std::string(what) + ": source count " + std::to_string(lhs) + " != target count " +
                             std::to_string(rhs));
    } else {
      r.notes.push_back(std::string(what) + ": " + std::to_string(lhs) + " witnesses on both sides");
    }
  };

  if (cert.kind == "zero-triangle") {
    const WeightedTripartiteGraph src = read_weighted(source_file);
    const WeightedTripartiteGraph wg(src.tripartite(), src.weights(), cert.weight_bound.value_or(src.bound()));
    const TripartiteGraph recorded = read_tripartite(output_file);
    const auto red = zero_triangle_to_triangle(wg);
    if (!(red.graph == recorded)) r.violations.push_back("output graph differs from a fresh run of the gadget");
    const bool zero = zero_triangle_brute(wg).has_value();
    const bool tri = count_triangles(recorded.graph()) > 0;
    if (zero != tri) {
      r.violations.push_back(std::string("zero-triangle ") + (zero ? "exists" : "absent") + " but output " +
                             (tri ? "has" : "has no") + " triangle");
    } else {
      r.notes.push_back(std::string("zero-triangle and triangle both ") + (zero ? "present" : "absent"));
    }
    return r;
  }

  const Graph recorded = read_graph(output_file);
  if (cert.kind == "triangle-to-kcycle") {
    const TripartiteGraph src = read_tripartite(source_file);
    const auto red = triangle_to_kcycle(src, cert.k);
    expect_equal(*red.graph, recorded);
    if (cert.k <= kMaxCycleLength) {
      count_identity("triangles vs k-cycles", count_triangles(src.graph()), count_k_cycles(recorded, cert.k));
    } else {
      r.notes.push_back("k > 8: counting identity not checked");
    }
  } else if (cert.kind == "four-cycle-to-kcycle" || cert.kind == "subdivide-uniform") {
    const Graph src = detect_format(source_file) == GraphFormat::Plain ? read_graph(source_file)
                                                                       : read_tripartite(source_file).graph();
    const std::size_t t = cert.uniform_path_length;
    expect_equal(subdivide_uniform(src, t).graph, recorded);
    bool any = false;
    for (int len = 3; static_cast<std::size_t>(len) * t <= static_cast<std::size_t>(kMaxCycleLength); ++len) {
      const int target = len * static_cast<int>(t);
      count_identity((std::to_string(len) + "-cycles vs " + std::to_string(target) + "-cycles").c_str(),
                     count_k_cycles(src, len), count_k_cycles(recorded, target));
      any = true;
    }
    if (!any) r.notes.push_back("path length too large for the brute-force counting identity");
  } else if (cert.kind == "subdivide-bc") {
    const TripartiteGraph src = read_tripartite(source_file);
    const std::size_t t = cert.bc_path_length;
    expect_equal(subdivide_bc(src, t).graph, recorded);
    const std::size_t target = t + 2;
    if (target % 2 == 1 && target <= static_cast<std::size_t>(kMaxCycleLength)) {
      count_identity("triangles vs k-cycles", count_triangles(src.graph()),
                     count_k_cycles(recorded, static_cast<int>(target)));
    } else {
      r.notes.push_back("even target length: counting identity not claimed");
    }
  } else {
    r.violations.push_back("unknown gadget kind '" + cert.kind + "'");
  }
  return r;
}

}  // namespace cyclescrub
