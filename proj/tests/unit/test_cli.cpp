#include "doctest.h"

#include <sstream>

#include "cli.hpp"
#include "cyclescrub/graph_io.hpp"
#include "cyclescrub/manifest.hpp"
#include "cyclescrub/oracle.hpp"
#include "json.hpp"
#include "reference.hpp"

using namespace cyclescrub;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json load(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"gen", "--n", "10", "--bogus"}).code == cli::kUsage);
  CHECK(run({"scrub", "--in", "missing.txt", "--out", "x", "--mode", "sideways"}).code == cli::kUsage);
}

TEST_CASE("gen is byte-identical per seed and validates the degree") {
  const auto dir = ref::scratch_dir("cli_gen");
  const auto a = (dir / "a.txt").string(), b = (dir / "b.txt").string();
  CHECK(run({"gen", "--n", "100", "--d", "10", "--seed", "7", "--out", a}).code == 0);
  CHECK(run({"gen", "--n", "100", "--d", "10", "--seed", "7", "--out", b}).code == 0);
  CHECK(ref::slurp(a) == ref::slurp(b));
  CHECK(read_graph(fs::path(a)).max_degree() <= 10);

  const auto bad = run({"gen", "--n", "10", "--d", "20", "--out", (dir / "c.txt").string()});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.find("error") != std::string::npos);
  CHECK_FALSE(fs::exists(dir / "c.txt"));
}

TEST_CASE("planted instances contain a triangle") {
  const auto dir = ref::scratch_dir("cli_planted");
  const auto file = (dir / "p.txt").string();
  const auto gen = run({"gen", "--kind", "planted", "--n", "60", "--seed", "3", "--out", file});
  REQUIRE(gen.code == 0);
  CHECK(gen.out.find("planted_edge") != std::string::npos);
  const auto tri = run({"oracle", "triangles", "--in", file});
  CHECK(tri.code == 0);
  CHECK_FALSE(tri.out.empty());
  CHECK(ref::trace_cube_triangles(read_tripartite(fs::path(file)).graph()) > 0);
}

TEST_CASE("oracle subcommands") {
  const auto dir = ref::scratch_dir("cli_oracle");
  const auto c7 = dir / "c7.txt";
  write_graph_file(ref::cycle_graph(7), c7);
  CHECK(run({"oracle", "girth", "--in", c7.string()}).out == "7\n");
  CHECK(run({"oracle", "count", "--k", "7", "--in", c7.string()}).out == "1\n");
  CHECK(run({"oracle", "degree-split", "--in", c7.string()}).out == "triangle-free\n");
  const auto tree = dir / "tree.txt";
  write_graph_file(Graph(3, {{0, 1}, {1, 2}}), tree);
  CHECK(run({"oracle", "girth", "--in", tree.string()}).out == "inf\n");
  CHECK(run({"oracle", "edge-triangles", "--in", tree.string()}).out == "0 1 0\n1 2 0\n");
  CHECK(run({"oracle", "count", "--k", "9", "--in", c7.string()}).code == cli::kUsage);
}

TEST_CASE("scrub all4 with audit, verify, determinism and tampering") {
  const auto dir = ref::scratch_dir("cli_scrub");
  const auto in = (dir / "g.txt").string();
  REQUIRE(run({"gen", "--n", "144", "--seed", "5", "--out", in}).code == 0);
  const auto out1 = dir / "o1", out2 = dir / "o2";
  const auto r1 = run({"scrub", "--in", in, "--out", out1.string(), "--mode", "all4", "--audit", "--seed", "9"});
  REQUIRE(r1.code == 0);
  const auto m1 = load(out1 / "manifest.json");
  CHECK(m1.at("schema_version") == 1);
  CHECK(m1.at("four_cycle_free") == true);
  CHECK(m1.at("audit").at("total_cycles").at(0) == 0);

  const auto v = run({"verify", "--manifest", (out1 / "manifest.json").string()});
  CHECK(v.code == 0);
  CHECK(v.out.find("PASS") != std::string::npos);

  REQUIRE(run({"scrub", "--in", in, "--out", out2.string(), "--mode", "all4", "--audit", "--seed", "9"}).code == 0);
  const auto m2 = load(out2 / "manifest.json");
  CHECK(strip_timestamp(m1) == strip_timestamp(m2));

  // Put back an input edge that closes a 4-cycle inside some slice.
  const Graph plain = read_graph(out1 / "input.txt");
  const std::size_t n = plain.vertex_count();
  bool tampered = false;
  for (const auto& entry : m1.at("slices")) {
    const auto file = out1 / entry.at("file").get<std::string>();
    const auto map = entry.at("vertex_map").get<std::vector<Vertex>>();
    const TripartiteGraph slice = read_tripartite(file);
    for (Vertex a = 0; a < map.size() && !tampered; ++a) {
      for (Vertex b = a + 1; b < map.size() && !tampered; ++b) {
        if (slice.part(a) == slice.part(b) || slice.graph().has_edge(a, b)) continue;
        if (!plain.has_edge(embedded_original(map[a], n), embedded_original(map[b], n))) continue;
        auto edges = slice.graph().edges();
        edges.push_back({a, b});
        const TripartiteGraph bigger(Graph(map.size(), edges), slice.parts());
        if (count_k_cycles(bigger.graph(), 4) == 0) continue;
        write_graph_file(bigger, file);
        tampered = true;
      }
    }
    if (tampered) break;
  }
  REQUIRE(tampered);
  const auto bad = run({"verify", "--manifest", (out1 / "manifest.json").string()});
  CHECK(bad.code == cli::kViolation);
  CHECK(bad.err.find("4-cycle (") != std::string::npos);
}

TEST_CASE("scrub most on triangle-free input reports an empty E'") {
  const auto dir = ref::scratch_dir("cli_bipartite");
  // Bipartite, max degree 3 <= sqrt(64).
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 64; v += 2) {
    edges.push_back(make_edge(v, (v + 1) % 64));
    edges.push_back(make_edge(v, (v + 7) % 64));
    edges.push_back(make_edge(v, (v + 13) % 64));
  }
  const auto in = dir / "bip.txt";
  write_graph_file(Graph(64, edges), in);
  const auto r = run({"scrub", "--in", in.string(), "--out", (dir / "o").string(), "--k", "5"});
  REQUIRE(r.code == 0);
  const auto m = load(dir / "o" / "manifest.json");
  CHECK(m.at("e_prime").empty());
  CHECK(run({"verify", "--manifest", (dir / "o" / "manifest.json").string()}).code == 0);
}

TEST_CASE("scrub checks the degree bound and the mode") {
  const auto dir = ref::scratch_dir("cli_degree");
  const auto in = dir / "dense.txt";
  write_graph_file(ref::random_gnp(40, 0.5, 2), in);
  const auto r = run({"scrub", "--in", in.string(), "--out", (dir / "o").string()});
  CHECK(r.code == cli::kViolation);
  CHECK(r.err.find("exceeds") != std::string::npos);
  CHECK(run({"scrub", "--in", in.string(), "--out", (dir / "o").string(), "--force"}).code == 0);
  CHECK(run({"scrub", "--in", in.string(), "--out", (dir / "o").string(), "--mode", "all4", "--k", "5"}).code ==
        cli::kUsage);
}

TEST_CASE("iteration cap is a warning") {
  const auto dir = ref::scratch_dir("cli_cap");
  const auto in = (dir / "g.txt").string();
  REQUIRE(run({"gen", "--n", "100", "--seed", "1", "--out", in}).code == 0);
  const auto r = run({"scrub", "--in", in, "--out", (dir / "o").string(), "--density-floor", "1", "--iteration-cap",
                      "1"});
  CHECK(r.code == cli::kWarning);
  CHECK(load(dir / "o" / "manifest.json").at("stats").at("cap_reached") == true);
}

TEST_CASE("reduce and verify certificates") {
  const auto dir = ref::scratch_dir("cli_reduce");
  for (int seed = 0; seed < 5; ++seed) {
    const auto w = (dir / ("w" + std::to_string(seed) + ".txt")).string();
    REQUIRE(run({"gen", "--kind", "weighted", "--na", "6", "--nb", "4", "--nc", "4", "--bound", "3", "--seed",
                 std::to_string(seed), "--n", "14", "--out", w})
                .code == 0);
    const auto out = (dir / ("t" + std::to_string(seed) + ".txt")).string();
    REQUIRE(run({"reduce", "--gadget", "zero-triangle", "--in", w, "--out", out}).code == 0);
    CHECK(run({"verify", "--certificate", out + ".cert.json"}).code == 0);
  }

  const auto tg = (dir / "tg.txt").string();
  REQUIRE(run({"gen", "--kind", "tripartite", "--n", "24", "--d", "4", "--seed", "2", "--out", tg}).code == 0);
  REQUIRE(run({"reduce", "--gadget", "triangle-to-kcycle", "--k", "6", "--in", tg, "--out",
               (dir / "k6.txt").string()})
              .code == 0);
  CHECK(run({"verify", "--certificate", (dir / "k6.txt.cert.json").string()}).code == 0);
  REQUIRE(run({"reduce", "--gadget", "subdivide-bc", "--t", "3", "--in", tg, "--out", (dir / "bc.txt").string()})
              .code == 0);
  CHECK(run({"verify", "--certificate", (dir / "bc.txt.cert.json").string()}).code == 0);
  REQUIRE(run({"reduce", "--gadget", "subdivide-uniform", "--t", "2", "--in", tg, "--out",
               (dir / "u.txt").string()})
              .code == 0);
  CHECK(run({"verify", "--certificate", (dir / "u.txt.cert.json").string()}).code == 0);

  const auto refused = run({"reduce", "--gadget", "triangle-to-kcycle", "--k", "8", "--in", tg, "--out",
                            (dir / "k8.txt").string()});
  CHECK(refused.code == cli::kWarning);
  CHECK_FALSE(fs::exists(dir / "k8.txt"));
  CHECK(fs::exists(dir / "k8.txt.cert.json"));
  CHECK(run({"verify", "--certificate", (dir / "k8.txt.cert.json").string()}).code == 0);

  // A tampered output graph fails verification.
  write_graph_file(ref::cycle_graph(5), dir / "k6.txt");
  CHECK(run({"verify", "--certificate", (dir / "k6.txt.cert.json").string()}).code == cli::kViolation);
}

TEST_CASE("distance and girth-gap harness outputs") {
  const auto dir = ref::scratch_dir("cli_distance");
  const auto in = (dir / "g.txt").string();
  REQUIRE(run({"gen", "--n", "81", "--seed", "4", "--out", in}).code == 0);
  const auto d = run({"reduce", "--gadget", "distance", "--orientation", "all", "--in", in, "--out",
                      (dir / "dist").string()});
  REQUIRE(d.code == 0);
  for (const char* tag : {"BC", "AB", "AC"}) {
    CHECK(fs::exists(dir / "dist" / (std::string("script_") + tag + ".txt")));
    CHECK(fs::exists(dir / "dist" / (std::string("membership_") + tag + ".txt")));
  }
  // Feeding the BFS answers back in gives the same membership.
  const auto again = run({"reduce", "--gadget", "distance", "--in", in, "--out", (dir / "dist2").string(),
                          "--answers", (dir / "dist" / "answers_bfs_BC.txt").string()});
  REQUIRE(again.code == 0);
  CHECK(ref::slurp(dir / "dist" / "membership_BC.txt") == ref::slurp(dir / "dist2" / "membership_BC.txt"));

  const auto gg = run({"reduce", "--gadget", "girth-gap", "--in", in, "--out", (dir / "gg").string()});
  REQUIRE(gg.code == 0);
  std::ifstream labels(dir / "gg" / "labels.csv");
  std::string line;
  std::getline(labels, line);
  CHECK(line == "file,has_triangle");
  while (std::getline(labels, line)) {
    const auto comma = line.find(',');
    const Graph g = read_tripartite(dir / "gg" / line.substr(0, comma)).graph();
    const auto gi = girth(g);
    if (line.substr(comma + 1) == "1") CHECK(gi == std::optional<std::size_t>(3));
    else CHECK((!gi || *gi >= 5));
  }
}

TEST_CASE("bench csv") {
  const auto empty = run({"bench"});
  REQUIRE(empty.code == 0);
  CHECK(std::count(empty.out.begin(), empty.out.end(), '\n') == 1);
  CHECK(empty.out.rfind("phase,n,seed,wall_ms", 0) == 0);

  // Non-timing columns repeat for a repeated seed.
  const auto r = run({"bench", "--sizes", "64", "--seeds", "3,3"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> cols;
    std::istringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cols.push_back(c);
    REQUIRE(cols.size() == 15);
    cols[3] = cols[13] = "";
    std::string joined;
    for (const auto& x : cols) joined += x + ",";
    rows.push_back(joined);
  }
  REQUIRE(rows.size() == 8);
  for (std::size_t i = 0; i < 4; ++i) CHECK(rows[i] == rows[i + 4]);
  CHECK(run({"bench", "--sizes", "5000"}).code == cli::kUsage);
}
