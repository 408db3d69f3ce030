#include "cyclescrub/slicing.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "cyclescrub/oracle.hpp"
#include "cyclescrub/rng.hpp"

namespace cyclescrub {

namespace {

constexpr std::uint64_t kPhaseStream = 0x64656e00;
constexpr std::uint64_t kAssignStream = 0x736c6963;

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5)) throw std::invalid_argument("alpha must lie in (0, 1/2)");
}

SliceStats stats_of(const Slice& s, int k) {
  SliceStats st;
  st.index = s.index;
  const Graph& g = s.graph.graph();
  st.vertices = g.vertex_count();
  st.edges = g.edge_count();
  st.max_degree = g.max_degree();
  for (int len = 4; len <= k; ++len) st.cycles.push_back(count_k_cycles_serial(g, len));
  return st;
}

SliceAudit summarize(int k, std::vector<std::optional<SliceStats>>&& per_slice) {
  SliceAudit audit;
  audit.k = k;
  audit.total_cycles.assign(static_cast<std::size_t>(std::max(0, k - 3)), 0);
  for (auto& st : per_slice) {
    if (!st) continue;
    for (std::size_t i = 0; i < st->cycles.size(); ++i) audit.total_cycles[i] += st->cycles[i];
    audit.max_slice_vertices = std::max(audit.max_slice_vertices, st->vertices);
    audit.max_slice_degree = std::max(audit.max_slice_degree, st->max_degree);
    audit.slices.push_back(std::move(*st));
  }
  return audit;
}

void check_audit_k(int k) {
  if (k < 4 || k > kMaxCycleLength) throw std::out_of_range("audit needs 4 <= k <= 8");
}

RemovalReport run_pipeline(const TripartiteGraph& tg, const PipelineOptions& options,
                           std::size_t degree_bound) {
  check_alpha(options.alpha);
  if (options.k < 4) throw std::invalid_argument("k must be at least 4");

  RemovalReport report;
  report.options = options;
  const std::size_t n = tg.vertex_count();
  Graph work = tg.graph();
  std::vector<Edge> e_prime;
  for (int kk = 4; kk <= options.k; ++kk) {
    DensePieceConfig config = options.config;
    config.k = kk;
    DensePieceParams params = derive_params(config, n);
    params.degree_bound = degree_bound;
    auto res = remove_dense_pieces(work, params, derive_seed(options.seed, kPhaseStream + static_cast<std::uint64_t>(kk)));
    PhaseStats ps;
    ps.k = kk;
    ps.pieces = res.pieces;
    ps.probes = res.probes;
    ps.removed_edges = res.removed.size();
    ps.reported_edges = res.reported.size();
    ps.cap_reached = res.cap_reached;
    report.phases.push_back(ps);
    report.cap_reached = report.cap_reached || res.cap_reached;
    e_prime.insert(e_prime.end(), res.reported.begin(), res.reported.end());
    work = std::move(res.scrubbed);
    report.params = params;
  }
  std::sort(e_prime.begin(), e_prime.end());
  e_prime.erase(std::unique(e_prime.begin(), e_prime.end()), e_prime.end());
  report.e_prime_tripartite = std::move(e_prime);

  TripartiteGraph scrubbed(std::move(work), tg.parts());
  auto assignment = random_slice_assignment(scrubbed, options.alpha, derive_seed(options.seed, kAssignStream));
  report.slices = SliceFamily(std::move(scrubbed), std::move(assignment));
  report.original_n = n;
  report.input = tg;
  report.e_prime = report.e_prime_tripartite;
  return report;
}

}  // namespace

std::size_t slices_per_side(std::size_t n, double alpha) {
  check_alpha(alpha);
  if (n < 2) return 1;
  const double s = std::floor(std::pow(static_cast<double>(n), 0.5 - alpha));
  return s < 1.0 ? 1 : static_cast<std::size_t>(s);
}

SliceAssignment random_slice_assignment(const TripartiteGraph& tg, double alpha, std::uint64_t seed) {
  SliceAssignment a;
  a.per_side = slices_per_side(tg.vertex_count(), alpha);
  Rng rng(seed);
  a.index.resize(tg.vertex_count());
  for (auto& idx : a.index) idx = static_cast<std::uint32_t>(rng.below(a.per_side));
  return a;
}

Slice materialize_slice(const TripartiteGraph& tg, const SliceAssignment& assignment, SliceIndex index) {
  Slice s;
  s.index = index;
  for (Vertex v = 0; v < tg.vertex_count(); ++v) {
    if (assignment.index[v] == index.of(tg.part(v))) s.global.push_back(v);
  }
  std::vector<Part> parts;
  parts.reserve(s.global.size());
  for (Vertex v : s.global) parts.push_back(tg.part(v));
  s.graph = TripartiteGraph(tg.graph().induced(s.global), std::move(parts));
  return s;
}

SliceFamily::SliceFamily(TripartiteGraph base, SliceAssignment assignment)
    : base_(std::move(base)), assignment_(std::move(assignment)) {
  if (assignment_.index.size() != base_.vertex_count()) {
    throw std::invalid_argument("slice assignment does not match the graph");
  }
  for (auto& side : buckets_) side.assign(per_side(), {});
  for (Vertex v = 0; v < base_.vertex_count(); ++v) {
    buckets_[static_cast<int>(base_.part(v))][assignment_.index[v]].push_back(v);
  }
}

SliceIndex SliceFamily::index_of(std::size_t flat) const {
  const auto s = per_side();
  return SliceIndex{static_cast<std::uint32_t>(flat / (s * s)), static_cast<std::uint32_t>((flat / s) % s),
                    static_cast<std::uint32_t>(flat % s)};
}

Slice SliceFamily::slice(SliceIndex i) const {
  Slice s;
  s.index = i;
  const auto& a = bucket(Part::A, i.j);
  const auto& b = bucket(Part::B, i.k);
  const auto& c = bucket(Part::C, i.l);
  s.global.reserve(a.size() + b.size() + c.size());
  s.global.insert(s.global.end(), a.begin(), a.end());
  s.global.insert(s.global.end(), b.begin(), b.end());
  s.global.insert(s.global.end(), c.begin(), c.end());
  std::sort(s.global.begin(), s.global.end());

  Graph g = base_.graph().induced(s.global);
  if (auto it = removals_.find(flat(i)); it != removals_.end()) {
    auto local = [&](Vertex v) {
      return static_cast<Vertex>(std::lower_bound(s.global.begin(), s.global.end(), v) - s.global.begin());
    };
    std::vector<Edge> drop;
    drop.reserve(it->second.size());
    for (const Edge& e : it->second) drop.push_back(make_edge(local(e.u), local(e.v)));
    g = g.without(drop);
  }
  std::vector<Part> parts;
  parts.reserve(s.global.size());
  for (Vertex v : s.global) parts.push_back(base_.part(v));
  s.graph = TripartiteGraph(std::move(g), std::move(parts));
  return s;
}

std::vector<Slice> SliceFamily::materialize_all() const {
  std::vector<Slice> out(slice_count());
  const auto count = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t f = 0; f < count; ++f) out[f] = slice(static_cast<std::size_t>(f));
  return out;
}

std::vector<Slice> SliceFamily::materialize_all_serial() const {
  std::vector<Slice> out;
  out.reserve(slice_count());
  for (std::size_t f = 0; f < slice_count(); ++f) out.push_back(slice(f));
  return out;
}

void SliceFamily::remove_edges(SliceIndex i, std::span<const Edge> edges) {
  if (edges.empty()) return;
  auto& list = removals_[flat(i)];
  list.insert(list.end(), edges.begin(), edges.end());
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
}

double default_alpha(double omega) { return (3.0 - omega) / 16.0; }

RemovalReport remove_most_k_cycles(const Graph& g, const PipelineOptions& options) {
  const std::size_t n = g.vertex_count();
  if (!options.force && g.max_degree() > isqrt(n)) {
    throw GraphError("max degree " + std::to_string(g.max_degree()) + " exceeds sqrt(n) = " +
                     std::to_string(isqrt(n)));
  }
  // Every embedded copy sees two copies of each original neighbor.
  const std::size_t bound = 2 * std::max(isqrt(n), g.max_degree());
  RemovalReport report = run_pipeline(tripartite_embed(g), options, bound);
  report.embedded = true;
  report.original_n = n;
  std::vector<Edge> mapped;
  mapped.reserve(report.e_prime_tripartite.size());
  for (const Edge& e : report.e_prime_tripartite) mapped.push_back(report.to_input(e));
  std::sort(mapped.begin(), mapped.end());
  mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
  report.e_prime = std::move(mapped);
  return report;
}

RemovalReport remove_most_k_cycles(const TripartiteGraph& tg, const PipelineOptions& options) {
  const std::size_t n = tg.vertex_count();
  const std::size_t max_deg = tg.graph().max_degree();
  if (!options.force && max_deg > isqrt(n)) {
    throw GraphError("max degree " + std::to_string(max_deg) + " exceeds sqrt(n) = " + std::to_string(isqrt(n)));
  }
  return run_pipeline(tg, options, std::max(isqrt(n), max_deg));
}

SliceAudit audit_slices(const SliceFamily& family, int k) {
  check_audit_k(k);
  std::vector<std::optional<SliceStats>> per_slice(family.slice_count());
  const auto count = static_cast<std::int64_t>(per_slice.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t f = 0; f < count; ++f) {
    Slice s = family.slice(static_cast<std::size_t>(f));
    if (s.graph.vertex_count() > 0) per_slice[f] = stats_of(s, k);
  }
  return summarize(k, std::move(per_slice));
}

SliceAudit audit_slices_serial(const SliceFamily& family, int k) {
  check_audit_k(k);
  std::vector<std::optional<SliceStats>> per_slice(family.slice_count());
  for (std::size_t f = 0; f < per_slice.size(); ++f) {
    Slice s = family.slice(f);
    if (s.graph.vertex_count() > 0) per_slice[f] = stats_of(s, k);
  }
  return summarize(k, std::move(per_slice));
}

}  // namespace cyclescrub
