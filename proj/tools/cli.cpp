#include "cli.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cyclescrub/bench_pipeline.hpp"
#include "cyclescrub/distance_harness.hpp"
#include "cyclescrub/four_cycle.hpp"
#include "cyclescrub/generators.hpp"
#include "cyclescrub/graph_io.hpp"
#include "cyclescrub/manifest.hpp"
#include "cyclescrub/oracle.hpp"
#include "cyclescrub/reductions.hpp"
#include "cyclescrub/verify.hpp"
#include "json.hpp"

namespace cyclescrub::cli {

namespace fs = std::filesystem;

namespace {

// Raised for bad parameter combinations found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenArgs {
  std::string kind = "bounded";
  std::size_t n = 0;
  std::optional<std::size_t> d;
  std::optional<std::size_t> budget;
  std::uint64_t seed = 0;
  std::string out;
  std::optional<std::size_t> na, nb, nc;
  double density = 0.5;
  std::int64_t bound = 4;
};

struct TuningArgs {
  std::string config_file;
  std::optional<double> omega, epsilon, gamma;
  std::optional<std::uint64_t> density_floor, path_samples, pair_samples, hit_threshold, iteration_cap;
  bool no_exact_fallback = false;
};

struct ScrubArgs {
  std::string in, out, mode = "most";
  int k = 4;
  std::optional<double> alpha;
  std::uint64_t seed = 0;
  bool force = false, audit = false;
  std::optional<int> audit_k;
  TuningArgs tuning;
};

struct ReduceArgs {
  std::string gadget, in, out, cert, answers, orientation = "BC";
  std::optional<int> k;
  std::optional<std::size_t> t;
  std::optional<double> alpha;
  std::uint64_t seed = 0;
  TuningArgs tuning;
};

struct VerifyArgs {
  std::string manifest, certificate;
};

struct OracleArgs {
  std::string op, in;
  int k = 3;
  double delta = 0.0;
};

struct BenchArgs {
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::string out;
  std::optional<double> alpha;
};

void add_tuning(CLI::App* app, TuningArgs& t) {
  app->add_option("--config", t.config_file, "key = value parameter file; flags override it");
  app->add_option("--omega", t.omega, "matrix multiplication exponent used in the formulas");
  app->add_option("--epsilon", t.epsilon, "slack added to (omega-1)/4 to form gamma");
  app->add_option("--gamma", t.gamma, "density exponent (overrides epsilon)");
  app->add_option("--density-floor", t.density_floor, "minimum crossing edges for a dense piece");
  app->add_option("--path-samples", t.path_samples, "paths sampled per dense-piece search");
  app->add_option("--pair-samples", t.pair_samples, "pairs sampled per density estimate");
  app->add_option("--hit-threshold", t.hit_threshold, "sampled edges needed to accept");
  app->add_option("--iteration-cap", t.iteration_cap, "maximum pieces removed per phase");
  app->add_flag("--no-exact-fallback", t.no_exact_fallback, "always sample, even when exact counting is cheaper");
}

DensePieceConfig make_config(const TuningArgs& t) {
  DensePieceConfig c;
  if (!t.config_file.empty()) {
    std::ifstream in(t.config_file);
    if (!in) throw UsageError("cannot open config file " + t.config_file);
    c = parse_config(in);
  }
  if (t.omega) c.omega = *t.omega;
  if (t.epsilon) c.epsilon = t.epsilon;
  if (t.gamma) c.gamma = t.gamma;
  if (t.density_floor) c.density_floor = t.density_floor;
  if (t.path_samples) c.path_samples = t.path_samples;
  if (t.pair_samples) c.pair_samples = t.pair_samples;
  if (t.hit_threshold) c.hit_threshold = t.hit_threshold;
  if (t.iteration_cap) c.iteration_cap = t.iteration_cap;
  if (t.no_exact_fallback) c.exact_fallback = false;
  return c;
}

ScrubInput load_scrub_input(const std::string& path) {
  switch (detect_format(fs::path(path))) {
    case GraphFormat::Plain: return read_graph(fs::path(path));
    case GraphFormat::Tripartite: return read_tripartite(fs::path(path));
    case GraphFormat::Weighted: break;
  }
  throw UsageError("weighted graphs cannot be scrubbed; use reduce --gadget zero-triangle first");
}

Graph load_any_graph(const std::string& path) {
  switch (detect_format(fs::path(path))) {
    case GraphFormat::Plain: return read_graph(fs::path(path));
    case GraphFormat::Tripartite: return read_tripartite(fs::path(path)).graph();
    case GraphFormat::Weighted: return read_weighted(fs::path(path)).graph();
  }
  return {};
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.kind == "bounded") {
    write_graph_file(gen_random_bounded(a.n, a.d.value_or(isqrt(a.n)), a.seed, a.budget), a.out);
  } else if (a.kind == "tripartite") {
    write_graph_file(gen_random_tripartite(a.n, a.d.value_or(isqrt(a.n)), a.seed, a.budget), a.out);
  } else if (a.kind == "planted") {
    const auto inst = gen_planted_triangle(a.n, a.d.value_or(std::max<std::size_t>(2, isqrt(a.n))), a.seed);
    write_graph_file(inst.graph, a.out);
    out << "planted_edge " << inst.planted_edge.u << ' ' << inst.planted_edge.v << '\n';
    out << "triangle " << inst.triangle[0] << ' ' << inst.triangle[1] << ' ' << inst.triangle[2] << '\n';
  } else {
    const auto sizes = balanced_part_sizes(a.n);
    write_graph_file(gen_weighted_tripartite(a.na.value_or(sizes[0]), a.nb.value_or(sizes[1]), a.nc.value_or(sizes[2]),
                                             a.density, a.bound, a.seed),
                     a.out);
  }
  out << "wrote " << a.out << '\n';
  return kOk;
}

int cmd_scrub(const ScrubArgs& a, std::ostream& out, std::ostream& err) {
  if (a.mode == "all4" && a.k != 4) throw UsageError("--mode all4 removes 4-cycles only; --k must be 4");
  const ScrubInput input = load_scrub_input(a.in);
  PipelineOptions po;
  po.k = a.k;
  po.config = make_config(a.tuning);
  po.alpha = a.alpha.value_or(default_alpha(po.config.omega));
  po.seed = a.seed;
  po.force = a.force;
  const int audit_k = a.audit_k.value_or(a.k);
  if (a.audit && (audit_k < 4 || audit_k > kMaxCycleLength)) throw UsageError("--audit-k must lie in [4, 8]");

  RemovalReport report;
  try {
    report = std::visit(
        [&](const auto& g) { return a.mode == "all4" ? remove_all_4cycles(g, po) : remove_most_k_cycles(g, po); },
        input);
  } catch (const GraphError& ex) {
    err << "error: " << ex.what() << " (use --force to override)\n";
    return kViolation;
  }
  std::optional<SliceAudit> audit;
  if (a.audit) audit = audit_slices(report.slices, audit_k);
  write_scrub_output(a.out, input, report, ManifestInfo{a.mode, a.in}, audit);

  out << "mode " << a.mode << ", slices per side " << report.slices.per_side() << ", E' edges "
      << report.e_prime.size() << '\n';
  for (const auto& p : report.phases) {
    out << "phase k=" << p.k << ": " << p.pieces << " pieces, " << p.removed_edges << " edges removed\n";
  }
  if (report.four_cycle_free) {
    out << "listed " << report.listed_four_cycles << " in-slice 4-cycles, removed " << report.cleanup_removed
        << " slice edges\n";
  }
  if (audit) {
    for (std::size_t i = 0; i < audit->total_cycles.size(); ++i) {
      out << "audit: " << audit->total_cycles[i] << " slice " << i + 4 << "-cycles\n";
    }
  }
  out << "wrote " << (fs::path(a.out) / kManifestName).string() << '\n';
  if (report.cap_reached) {
    err << "warning: iteration cap reached\n";
    return kWarning;
  }
  return kOk;
}

void write_certificate(const std::string& path, const ReductionCertificate& cert, const std::string& source,
                       const std::string& source_format, const std::optional<std::string>& output,
                       const std::string& output_format) {
  nlohmann::json doc;
  doc["schema_version"] = kManifestSchemaVersion;
  doc["certificate"] = to_json(cert);
  doc["source"] = {{"file", fs::absolute(source).string()}, {"format", source_format}};
  if (output) {
    doc["output"] = {{"file", fs::absolute(*output).string()}, {"format", output_format}};
  } else {
    doc["output"] = nullptr;
  }
  write_text_file(path, doc.dump(2) + "\n");
}

int cmd_distance(const ReduceArgs& a, std::ostream& out) {
  const ScrubInput input = load_scrub_input(a.in);
  PipelineOptions po;
  po.k = a.k.value_or(4);
  po.config = make_config(a.tuning);
  po.alpha = a.alpha.value_or(default_alpha(po.config.omega));
  po.seed = a.seed;
  const RemovalReport report = std::visit([&](const auto& g) { return remove_most_k_cycles(g, po); }, input);
  const fs::path dir(a.out);
  fs::create_directories(dir);

  std::vector<Orientation> orientations;
  if (a.orientation == "all") orientations = {Orientation::BC, Orientation::AB, Orientation::AC};
  else orientations = {orientation_from_name(a.orientation)};

  std::optional<DistanceAnswers> external;
  if (!a.answers.empty()) {
    std::ifstream in(a.answers);
    if (!in) throw UsageError("cannot open answers file " + a.answers);
    external = read_answers(in);
  }
  for (Orientation o : orientations) {
    const std::string tag = orientation_name(o);
    const auto instances = make_distance_instances(report, o);
    const auto init_name = "init_" + tag + ".txt";
    const auto script = emit_update_sequence(instances, report.input.vertex_count(), init_name);
    write_graph_file(script.initial, dir / init_name);
    write_text_file(dir / ("script_" + tag + ".txt"), script.text);
    const auto bfs = exact_bfs_answers(instances);
    std::ostringstream ans;
    write_answers(bfs, ans);
    write_text_file(dir / ("answers_bfs_" + tag + ".txt"), ans.str());

    const auto membership = filter_candidates(report, instances, external ? *external : bfs, po.k);
    std::ostringstream mem;
    std::size_t yes = 0;
    for (std::size_t i = 0; i < membership.edges.size(); ++i) {
      mem << membership.edges[i].u << ' ' << membership.edges[i].v << ' ' << int(membership.in_triangle[i]) << '\n';
      yes += membership.in_triangle[i];
    }
    write_text_file(dir / ("membership_" + tag + ".txt"), mem.str());
    out << tag << ": " << instances.size() << " instances, " << bfs.size() << " queries, " << yes << " of "
        << membership.edges.size() << " edges in triangles\n";
  }
  return kOk;
}

int cmd_girth_gap(const ReduceArgs& a, std::ostream& out) {
  const ScrubInput input = load_scrub_input(a.in);
  PipelineOptions po;
  po.config = make_config(a.tuning);
  po.alpha = a.alpha.value_or(default_alpha(po.config.omega));
  po.seed = a.seed;
  const RemovalReport report = std::visit([&](const auto& g) { return remove_all_4cycles(g, po); }, input);
  const fs::path dir(a.out);
  fs::create_directories(dir);
  std::ostringstream labels;
  labels << "file,has_triangle\n";
  std::size_t yes = 0;
  const auto instances = girth_gap_instances(report);
  for (const auto& inst : instances) {
    const auto name = slice_file_name(inst.slice.index);
    write_graph_file(inst.slice.graph, dir / name);
    labels << name << ',' << (inst.has_triangle ? 1 : 0) << '\n';
    yes += inst.has_triangle;
  }
  write_text_file(dir / "labels.csv", labels.str());
  out << instances.size() << " slices, " << yes << " with a triangle (girth 3), the rest girth >= 5\n";
  return kOk;
}

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  if (a.gadget == "distance") return cmd_distance(a, out);
  if (a.gadget == "girth-gap") return cmd_girth_gap(a, out);
  const std::string cert_path = a.cert.empty() ? a.out + ".cert.json" : a.cert;

  if (a.gadget == "zero-triangle") {
    const auto wg = read_weighted(fs::path(a.in));
    const auto red = zero_triangle_to_triangle(wg);
    write_graph_file(red.graph, a.out);
    write_certificate(cert_path, red.certificate, a.in, "weighted", a.out, "tripartite");
    out << "wrote " << a.out << " (" << red.graph.vertex_count() << " vertices) and " << cert_path << '\n';
    return kOk;
  }
  if (a.gadget == "triangle-to-kcycle") {
    if (!a.k) throw UsageError("--k is required");
    const auto tg = read_tripartite(fs::path(a.in));
    const auto red = triangle_to_kcycle(tg, *a.k);
    if (!red.graph) {
      write_certificate(cert_path, red.certificate, a.in, "tripartite", std::nullopt, "");
      err << "refused: " << red.certificate.forward_map << "; certificate in " << cert_path << '\n';
      return kWarning;
    }
    write_graph_file(*red.graph, a.out);
    write_certificate(cert_path, red.certificate, a.in, "tripartite", a.out, "plain");
    out << "wrote " << a.out << " and " << cert_path << '\n';
    return kOk;
  }
  ReductionCertificate cert;
  Graph result;
  std::string source_format = "plain";
  if (a.gadget == "four-cycle-to-kcycle") {
    if (!a.k) throw UsageError("--k is required");
    auto red = four_cycle_to_kcycle(load_any_graph(a.in), *a.k);
    cert = red.certificate;
    result = std::move(*red.graph);
  } else if (a.gadget == "subdivide-uniform") {
    if (!a.t) throw UsageError("--t is required");
    result = subdivide_uniform(load_any_graph(a.in), *a.t).graph;
    cert.kind = "subdivide-uniform";
    cert.source = "r-cycle";
    cert.target = "(r*t)-cycle";
    cert.uniform_path_length = *a.t;
    cert.forward_map = "every edge stretched to length " + std::to_string(*a.t);
  } else if (a.gadget == "subdivide-bc") {
    if (!a.t) throw UsageError("--t is required");
    result = subdivide_bc(read_tripartite(fs::path(a.in)), *a.t).graph;
    source_format = "tripartite";
    cert.kind = "subdivide-bc";
    cert.source = "triangle";
    cert.target = std::to_string(*a.t + 2) + "-cycle";
    cert.k = static_cast<int>(*a.t + 2);
    cert.bc_path_length = *a.t;
    cert.forward_map = "B-C edges stretched to length " + std::to_string(*a.t);
  } else {
    throw UsageError("unknown gadget '" + a.gadget + "'");
  }
  write_graph_file(result, a.out);
  write_certificate(cert_path, cert, a.in, source_format, a.out, "plain");
  out << "wrote " << a.out << " and " << cert_path << '\n';
  return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.manifest.empty() == a.certificate.empty()) throw UsageError("give exactly one of --manifest, --certificate");
  const VerifyResult r = a.manifest.empty() ? verify_certificate(a.certificate) : verify_manifest(a.manifest);
  for (const auto& note : r.notes) out << "note: " << note << '\n';
  for (const auto& v : r.violations) err << "violation: " << v << '\n';
  out << (r.ok() ? "PASS" : "FAIL") << '\n';
  return r.ok() ? kOk : kViolation;
}

void print_cycles(const CycleList& cycles, std::ostream& out) {
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << '\n';
  }
}

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  if (a.op == "zero-triangle") {
    const auto w = zero_triangle_brute(read_weighted(fs::path(a.in)));
    if (w) out << w->a << ' ' << w->b << ' ' << w->c << '\n';
    else out << "none\n";
    return kOk;
  }
  const Graph g = load_any_graph(a.in);
  if (a.op == "triangles") {
    print_cycles(enumerate_triangles(g), out);
  } else if (a.op == "edge-triangles") {
    const auto flags = all_edge_triangle(g);
    for (std::size_t i = 0; i < flags.size(); ++i) {
      out << g.edges()[i].u << ' ' << g.edges()[i].v << ' ' << int(flags[i]) << '\n';
    }
  } else if (a.op == "cycles") {
    print_cycles(enumerate_k_cycles(g, a.k), out);
  } else if (a.op == "count") {
    out << count_k_cycles(g, a.k) << '\n';
  } else if (a.op == "girth") {
    const auto gi = girth(g);
    if (gi) out << *gi << '\n';
    else out << "inf\n";
  } else if (a.op == "degree-split") {
    out << (triangle_detect_degree_split(g, a.delta) ? "triangle" : "triangle-free") << '\n';
  }
  return kOk;
}

int cmd_bench(const BenchArgs& a, int jobs, std::ostream& out) {
  BenchOptions bo;
  bo.alpha = a.alpha.value_or(0.0);
  // Sequential unless --jobs asks otherwise, so that timings mean something.
  bo.jobs = std::max(jobs, 1);
  if (jobs <= 1) omp_set_num_threads(1);
  if (a.out.empty()) {
    bench_pipeline(a.sizes, a.seeds, bo, out);
    return kOk;
  }
  std::ostringstream csv;
  bench_pipeline(a.sizes, a.seeds, bo, csv);
  write_text_file(a.out, csv.str());
  out << "wrote " << a.out << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Short-cycle removal, slicing and reduction gadgets for triangle problems", "cyclescrub"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads for parallel kernels (0 = OpenMP default)")->check(CLI::NonNegativeNumber);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random graph");
  gen_cmd->add_option("--kind", gen.kind, "bounded | tripartite | planted | weighted")
      ->check(CLI::IsMember({"bounded", "tripartite", "planted", "weighted"}));
  gen_cmd->add_option("--n", gen.n, "vertex count")->required();
  gen_cmd->add_option("--d", gen.d, "max degree (default isqrt(n))");
  gen_cmd->add_option("--budget", gen.budget, "target edge count (default n*d/4)");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--out", gen.out, "output file")->required();
  gen_cmd->add_option("--na", gen.na, "weighted: size of A");
  gen_cmd->add_option("--nb", gen.nb, "weighted: size of B");
  gen_cmd->add_option("--nc", gen.nc, "weighted: size of C");
  gen_cmd->add_option("--density", gen.density, "weighted: edge probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--bound", gen.bound, "weighted: weight bound W")->check(CLI::NonNegativeNumber);

  ScrubArgs scrub;
  auto* scrub_cmd = app.add_subcommand("scrub", "remove short cycles and write the slice family");
  scrub_cmd->add_option("--in", scrub.in, "input graph (plain or tripartite)")->required();
  scrub_cmd->add_option("--out", scrub.out, "output directory")->required();
  scrub_cmd->add_option("--mode", scrub.mode, "most | all4")->check(CLI::IsMember({"most", "all4"}));
  scrub_cmd->add_option("--k", scrub.k, "longest cycle length to thin")->check(CLI::Range(4, 64));
  scrub_cmd->add_option("--alpha", scrub.alpha, "slice exponent");
  scrub_cmd->add_option("--seed", scrub.seed, "random seed");
  scrub_cmd->add_flag("--force", scrub.force, "accept inputs above the sqrt(n) degree bound");
  scrub_cmd->add_flag("--audit", scrub.audit, "count short cycles in every slice");
  scrub_cmd->add_option("--audit-k", scrub.audit_k, "longest cycle length audited (<= 8)");
  add_tuning(scrub_cmd, scrub.tuning);

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "apply a reduction gadget or build harness instances");
  reduce_cmd
      ->add_option("--gadget", reduce.gadget,
                   "zero-triangle | triangle-to-kcycle | four-cycle-to-kcycle | subdivide-uniform | subdivide-bc | "
                   "distance | girth-gap")
      ->required()
      ->check(CLI::IsMember({"zero-triangle", "triangle-to-kcycle", "four-cycle-to-kcycle", "subdivide-uniform",
                             "subdivide-bc", "distance", "girth-gap"}));
  reduce_cmd->add_option("--in", reduce.in, "input graph")->required();
  reduce_cmd->add_option("--out", reduce.out, "output graph (directory for distance and girth-gap)")->required();
  reduce_cmd->add_option("--cert", reduce.cert, "certificate file (default <out>.cert.json)");
  reduce_cmd->add_option("--k", reduce.k, "target cycle length / no-case threshold");
  reduce_cmd->add_option("--t", reduce.t, "subdivision path length");
  reduce_cmd->add_option("--alpha", reduce.alpha, "slice exponent for distance and girth-gap");
  reduce_cmd->add_option("--seed", reduce.seed, "random seed");
  reduce_cmd->add_option("--orientation", reduce.orientation, "queried sides: BC | AB | AC | all")
      ->check(CLI::IsMember({"BC", "AB", "AC", "all"}));
  reduce_cmd->add_option("--answers", reduce.answers, "distance answers file (default: exact BFS)");
  add_tuning(reduce_cmd, reduce.tuning);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check a scrub manifest or a reduction certificate");
  verify_cmd->add_option("--manifest", verify.manifest, "manifest.json of a scrub run");
  verify_cmd->add_option("--certificate", verify.certificate, "certificate written by reduce");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force queries");
  oracle_cmd
      ->add_option("op", oracle.op,
                   "triangles | edge-triangles | cycles | count | girth | zero-triangle | degree-split")
      ->required()
      ->check(CLI::IsMember(
          {"triangles", "edge-triangles", "cycles", "count", "girth", "zero-triangle", "degree-split"}));
  oracle_cmd->add_option("--in", oracle.in, "input graph")->required();
  oracle_cmd->add_option("--k", oracle.k, "cycle length for cycles/count")->check(CLI::Range(3, 8));
  oracle_cmd->add_option("--delta", oracle.delta, "degree-split exponent offset");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "time the pipeline phases and write CSV");
  bench_cmd->add_option("--sizes", bench.sizes, "vertex counts")->delimiter(',');
  bench_cmd->add_option("--seeds", bench.seeds, "seeds")->delimiter(',');
  bench_cmd->add_option("--out", bench.out, "CSV file (default stdout)");
  bench_cmd->add_option("--alpha", bench.alpha, "slice exponent");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (jobs > 0) omp_set_num_threads(jobs);

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*scrub_cmd) return cmd_scrub(scrub, out, err);
    if (*reduce_cmd) return cmd_reduce(reduce, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*oracle_cmd) return cmd_oracle(oracle, out);
    if (*bench_cmd) return cmd_bench(bench, jobs, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace cyclescrub::cli
