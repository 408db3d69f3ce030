#include "cyclescrub/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace cyclescrub {

namespace {

const char* kind_name(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::Malformed: return "malformed line";
    case ParseError::Kind::SelfLoop: return "self-loop";
    case ParseError::Kind::DuplicateEdge: return "duplicate edge";
    case ParseError::Kind::PartViolation: return "part violation";
    case ParseError::Kind::OutOfRange: return "vertex out of range";
  }
  return "parse error";
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool is_parts_line(std::string_view line) {
  auto t = tokens(line);
  if (t.size() != 1) return false;
  return std::all_of(t[0].begin(), t[0].end(), [](char c) { return c == 'A' || c == 'B' || c == 'C'; });
}

struct RawFile {
  std::size_t n = 0;
  std::vector<Part> parts;
  std::vector<Edge> edges;
  std::vector<std::int64_t> weights;  // parallel to edges as read
};

// Reads any of the three variants. `want_parts` / `want_weights` state what
// the caller expects; a mismatch is a malformed-line error.
RawFile read_raw(std::istream& in, bool want_parts, bool want_weights) {
  RawFile raw;
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!tokens(line).empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(ParseError::Kind::Malformed, 1, "missing header");
  auto header = tokens(line);
  std::size_t m = 0;
  if (header.size() != 2 || !parse_int(header[0], raw.n) || !parse_int(header[1], m)) {
    throw ParseError(ParseError::Kind::Malformed, lineno, "expected 'n m'");
  }

  // With n = 0 the parts line is empty and indistinguishable from a blank line.
  if (want_parts && raw.n > 0) {
    if (!next_line() || !is_parts_line(line) || tokens(line)[0].size() != raw.n) {
      throw ParseError(ParseError::Kind::Malformed, lineno,
                       "expected a line of " + std::to_string(raw.n) + " part letters");
    }
    const auto letters = tokens(line);
    for (char c : letters[0]) raw.parts.push_back(part_from_letter(c));
  }

  std::unordered_map<std::uint64_t, std::size_t> seen;
  const std::size_t arity = want_weights ? 3 : 2;
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line()) {
      throw ParseError(ParseError::Kind::Malformed, lineno + 1,
                       "expected " + std::to_string(m) + " edge lines, found " + std::to_string(i));
    }
    auto t = tokens(line);
    std::uint64_t u = 0, v = 0;
    std::int64_t w = 0;
    if (t.size() != arity || !parse_int(t[0], u) || !parse_int(t[1], v) ||
        (want_weights && !parse_int(t[2], w))) {
      throw ParseError(ParseError::Kind::Malformed, lineno, "bad edge line '" + line + "'");
    }
    if (u == v) throw ParseError(ParseError::Kind::SelfLoop, lineno, "vertex " + std::to_string(u));
    if (u >= raw.n || v >= raw.n) {
      throw ParseError(ParseError::Kind::OutOfRange, lineno,
                       "edge " + std::to_string(u) + " " + std::to_string(v));
    }
    const Edge e = make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.emplace(edge_key(e), lineno).second) {
      throw ParseError(ParseError::Kind::DuplicateEdge, lineno,
                       "edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (want_parts && raw.parts[e.u] == raw.parts[e.v]) {
      throw ParseError(ParseError::Kind::PartViolation, lineno,
                       "edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                           " inside part " + part_letter(raw.parts[e.u]));
    }
    raw.edges.push_back(e);
    raw.weights.push_back(w);
  }
  if (next_line()) {
    throw ParseError(ParseError::Kind::Malformed, lineno, "trailing content after edge lines");
  }
  return raw;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

void write_edges(const Graph& g, std::ostream& out, const std::vector<std::int64_t>* weights) {
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << edges[i].u << ' ' << edges[i].v;
    if (weights) out << ' ' << (*weights)[i];
    out << '\n';
  }
}

void write_parts(const TripartiteGraph& g, std::ostream& out) {
  std::string letters;
  letters.reserve(g.vertex_count());
  for (Part p : g.parts()) letters.push_back(part_letter(p));
  out << letters << '\n';
}

template <class G>
void write_atomic(const G& g, const std::filesystem::path& path) {
  std::ostringstream buf;
  write_graph(g, buf);
  write_text_file(path, buf.str());
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + kind_name(kind) + ": " + detail),
      kind_(kind),
      line_(line) {}

GraphFormat detect_format(std::istream& in) {
  std::string line;
  std::vector<std::string> lines;
  while (lines.size() < 3 && std::getline(in, line)) {
    if (!tokens(line).empty()) lines.push_back(line);
  }
  if (lines.size() < 2) return GraphFormat::Plain;
  if (!is_parts_line(lines[1])) return GraphFormat::Plain;
  if (lines.size() >= 3 && tokens(lines[2]).size() == 3) return GraphFormat::Weighted;
  return GraphFormat::Tripartite;
}

GraphFormat detect_format(const std::filesystem::path& path) {
  auto in = open_input(path);
  return detect_format(in);
}

Graph read_graph(std::istream& in) {
  auto raw = read_raw(in, false, false);
  return Graph(raw.n, std::move(raw.edges));
}

TripartiteGraph read_tripartite(std::istream& in) {
  auto raw = read_raw(in, true, false);
  return TripartiteGraph(Graph(raw.n, std::move(raw.edges)), std::move(raw.parts));
}

WeightedTripartiteGraph read_weighted(std::istream& in) {
  auto raw = read_raw(in, true, true);
  std::vector<std::pair<Edge, std::int64_t>> paired;
  std::int64_t bound = 0;
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    paired.emplace_back(raw.edges[i], raw.weights[i]);
    bound = std::max(bound, raw.weights[i] < 0 ? -raw.weights[i] : raw.weights[i]);
  }
  std::sort(paired.begin(), paired.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::int64_t> weights;
  for (const auto& [e, w] : paired) weights.push_back(w);
  TripartiteGraph tg(Graph(raw.n, std::move(raw.edges)), std::move(raw.parts));
  return WeightedTripartiteGraph(std::move(tg), std::move(weights), bound);
}

Graph read_graph(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_graph(in);
}

TripartiteGraph read_tripartite(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_tripartite(in);
}

WeightedTripartiteGraph read_weighted(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_weighted(in);
}

void write_graph(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  write_edges(g, out, nullptr);
}

void write_graph(const TripartiteGraph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.graph().edge_count() << '\n';
  write_parts(g, out);
  write_edges(g.graph(), out, nullptr);
}

void write_graph(const WeightedTripartiteGraph& g, std::ostream& out) {
  out << g.graph().vertex_count() << ' ' << g.graph().edge_count() << '\n';
  write_parts(g.tripartite(), out);
  write_edges(g.graph(), out, &g.weights());
}

void write_graph_file(const Graph& g, const std::filesystem::path& path) { write_atomic(g, path); }
void write_graph_file(const TripartiteGraph& g, const std::filesystem::path& path) {
  write_atomic(g, path);
}
void write_graph_file(const WeightedTripartiteGraph& g, const std::filesystem::path& path) {
  write_atomic(g, path);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace cyclescrub
