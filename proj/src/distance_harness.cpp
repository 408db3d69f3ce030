#include "cyclescrub/distance_harness.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cyclescrub {

namespace {

Vertex local_id(const Slice& s, Vertex global) {
  auto it = std::lower_bound(s.global.begin(), s.global.end(), global);
  if (it == s.global.end() || *it != global) {
    throw std::invalid_argument("vertex " + std::to_string(global) + " is not in the slice");
  }
  return static_cast<Vertex>(it - s.global.begin());
}

bool oriented(const TripartiteGraph& tg, Edge e, Orientation o) {
  const auto [p, q] = orientation_parts(o);
  const Part pu = tg.part(e.u), pv = tg.part(e.v);
  return (pu == p && pv == q) || (pu == q && pv == p);
}

template <class Neighbors>
std::optional<std::uint64_t> bfs(std::size_t n, Vertex from, Vertex to, Neighbors&& neighbors) {
  if (from == to) return 0;
  std::vector<std::uint64_t> dist(n, UINT64_MAX);
  std::deque<Vertex> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : neighbors(u)) {
      if (dist[w] != UINT64_MAX) continue;
      dist[w] = dist[u] + 1;
      if (w == to) return dist[w];
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace

std::pair<Part, Part> orientation_parts(Orientation o) {
  switch (o) {
    case Orientation::BC: return {Part::B, Part::C};
    case Orientation::AB: return {Part::A, Part::B};
    case Orientation::AC: return {Part::A, Part::C};
  }
  return {Part::B, Part::C};
}

const char* orientation_name(Orientation o) {
  switch (o) {
    case Orientation::BC: return "BC";
    case Orientation::AB: return "AB";
    case Orientation::AC: return "AC";
  }
  return "BC";
}

Orientation orientation_from_name(const std::string& name) {
  if (name == "BC") return Orientation::BC;
  if (name == "AB") return Orientation::AB;
  if (name == "AC") return Orientation::AC;
  throw std::invalid_argument("unknown orientation '" + name + "'");
}

std::vector<DistanceInstance> make_distance_instances(const RemovalReport& report, Orientation orientation) {
  const SliceFamily& family = report.slices;
  std::vector<DistanceInstance> out;
  for (std::size_t f = 0; f < family.slice_count(); ++f) {
    Slice slice = family.slice(f);
    std::vector<Edge> local_removed;
    DistanceInstance inst;
    for (const Edge& e : slice.graph.graph().edges()) {
      if (!oriented(slice.graph, e, orientation)) continue;
      local_removed.push_back(e);
      inst.queries.push_back(slice.to_global(e));
    }
    if (inst.queries.empty()) continue;
    std::sort(inst.queries.begin(), inst.queries.end());
    inst.graph = slice.graph.graph().without(local_removed);
    inst.slice = std::move(slice);
    inst.orientation = orientation;
    inst.k = report.options.k;
    out.push_back(std::move(inst));
  }
  return out;
}

std::optional<std::uint64_t> instance_distance(const DistanceInstance& inst, Edge e) {
  const Vertex from = local_id(inst.slice, e.u);
  const Vertex to = local_id(inst.slice, e.v);
  return bfs(inst.graph.vertex_count(), from, to, [&](Vertex v) { return inst.graph.neighbors(v); });
}

DistanceAnswers exact_bfs_answers(const std::vector<DistanceInstance>& instances) {
  DistanceAnswers answers;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (const Edge& q : instances[i].queries) answers[{i, q}] = instance_distance(instances[i], q);
  }
  return answers;
}

EdgeMembership filter_candidates(const RemovalReport& report, const std::vector<DistanceInstance>& instances,
                                 const DistanceAnswers& answers, int k) {
  std::set<Edge> confirmed;
  Orientation orientation = Orientation::BC;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    orientation = inst.orientation;
    const Graph& g = inst.slice.graph.graph();
    for (const Edge& q : inst.queries) {
      auto it = answers.find({i, q});
      if (it == answers.end()) {
        throw std::invalid_argument("no answer for instance " + std::to_string(i) + " query " +
                                    std::to_string(q.u) + " " + std::to_string(q.v));
      }
      if (confirmed.count(q)) continue;
      if (!it->second || *it->second >= static_cast<std::uint64_t>(k)) continue;
      auto nu = g.neighbors(local_id(inst.slice, q.u));
      auto nv = g.neighbors(local_id(inst.slice, q.v));
      std::vector<Vertex> common;
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
      if (!common.empty()) confirmed.insert(q);
    }
  }

  EdgeMembership out;
  const TripartiteGraph& tg = report.input;
  for (const Edge& e : tg.graph().edges()) {
    if (!oriented(tg, e, orientation)) continue;
    out.edges.push_back(e);
    const bool in_e_prime =
        std::binary_search(report.e_prime_tripartite.begin(), report.e_prime_tripartite.end(), e);
    out.in_triangle.push_back(in_e_prime || confirmed.count(e) ? 1 : 0);
  }
  return out;
}

void write_answers(const DistanceAnswers& answers, std::ostream& out) {
  for (const auto& [key, dist] : answers) {
    out << key.first << ' ' << key.second.u << ' ' << key.second.v << ' ';
    if (dist) out << *dist; else out << "inf";
    out << '\n';
  }
}

DistanceAnswers read_answers(std::istream& in) {
  DistanceAnswers answers;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::size_t inst = 0;
    Vertex u = 0, v = 0;
    std::string dist;
    if (!(ls >> inst)) continue;
    if (!(ls >> u >> v >> dist)) {
      throw std::invalid_argument("answers line " + std::to_string(lineno) + ": expected 'instance u v distance'");
    }
    std::optional<std::uint64_t> d;
    if (dist != "inf") {
      try {
        d = std::stoull(dist);
      } catch (const std::exception&) {
        throw std::invalid_argument("answers line " + std::to_string(lineno) + ": bad distance '" + dist + "'");
      }
    }
    answers[{inst, make_edge(u, v)}] = d;
  }
  return answers;
}

UpdateScript emit_update_sequence(const std::vector<DistanceInstance>& instances, std::size_t vertex_count,
                                  const std::string& graph_file) {
  auto global_edges = [](const DistanceInstance& inst) {
    std::vector<Edge> out;
    for (const Edge& e : inst.graph.edges()) out.push_back(inst.slice.to_global(e));
    std::sort(out.begin(), out.end());
    return out;
  };
  UpdateScript script;
  script.initial = instances.empty() ? Graph(vertex_count) : Graph(vertex_count, global_edges(instances.front()));
  std::ostringstream out;
  out << "INIT " << graph_file << '\n';
  for (std::size_t i = 0; i < instances.size(); ++i) {
    out << "PHASE " << i + 1 << '\n';
    for (const Edge& q : instances[i].queries) out << "QUERY " << q.u << ' ' << q.v << '\n';
    if (i + 1 == instances.size()) break;
    for (const Edge& e : global_edges(instances[i])) out << "DELETE " << e.u << ' ' << e.v << '\n';
    for (const Edge& e : global_edges(instances[i + 1])) out << "INSERT " << e.u << ' ' << e.v << '\n';
  }
  script.text = out.str();
  return script;
}

DistanceAnswers replay_update_script(std::istream& script, const std::function<Graph(const std::string&)>& load) {
  DistanceAnswers answers;
  std::vector<std::set<Vertex>> adj;
  bool initialized = false;
  std::size_t phase = 0;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("script line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(script, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    if (op == "INIT") {
      std::string file;
      if (!(ls >> file)) fail("INIT needs a graph file");
      const Graph g = load(file);
      adj.assign(g.vertex_count(), {});
      for (const Edge& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
      }
      initialized = true;
      continue;
    }
    if (!initialized) fail("missing INIT");
    if (op == "PHASE") {
      if (!(ls >> phase) || phase == 0) fail("bad phase number");
      continue;
    }
    Vertex u = 0, v = 0;
    if (!(ls >> u >> v) || u >= adj.size() || v >= adj.size()) fail("bad vertex pair");
    if (op == "QUERY") {
      if (phase == 0) fail("QUERY before PHASE");
      answers[{phase - 1, make_edge(u, v)}] = bfs(adj.size(), u, v, [&](Vertex x) -> const std::set<Vertex>& { return adj[x]; });
    } else if (op == "DELETE") {
      if (!adj[u].erase(v) || !adj[v].erase(u)) fail("DELETE of a missing edge");
    } else if (op == "INSERT") {
      if (!adj[u].insert(v).second || !adj[v].insert(u).second) fail("INSERT of an existing edge");
    } else {
      fail("unknown operation '" + op + "'");
    }
  }
  return answers;
}

std::vector<GirthGapInstance> girth_gap_instances(const RemovalReport& report) {
  if (!report.four_cycle_free) throw std::invalid_argument("girth-gap instances need 4-cycle-free slices");
  std::vector<GirthGapInstance> out;
  const SliceFamily& family = report.slices;
  for (std::size_t f = 0; f < family.slice_count(); ++f) {
    Slice s = family.slice(f);
    if (s.graph.graph().edge_count() == 0) continue;
    const bool tri = count_triangles(s.graph.graph()) > 0;
    out.push_back({std::move(s), tri});
  }
  return out;
}

}  // namespace cyclescrub
