#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cyclescrub/graph.hpp"

namespace cyclescrub {

// Edge-list format:
//   n m
//   [ABC...]        tripartite and weighted variants: n part letters
//   u v [w]         m lines, 0-indexed; w only in the weighted variant
// Writers emit u < v in sorted order. Readers accept either endpoint order.

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Malformed, SelfLoop, DuplicateEdge, PartViolation, OutOfRange };

  ParseError(Kind kind, std::size_t line, const std::string& detail);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

enum class GraphFormat { Plain, Tripartite, Weighted };

/// Inspects the header lines without consuming the whole file.
GraphFormat detect_format(std::istream& in);
GraphFormat detect_format(const std::filesystem::path& path);

Graph read_graph(std::istream& in);
TripartiteGraph read_tripartite(std::istream& in);
/// The weight bound is the largest |w| in the file.
WeightedTripartiteGraph read_weighted(std::istream& in);

Graph read_graph(const std::filesystem::path& path);
TripartiteGraph read_tripartite(const std::filesystem::path& path);
WeightedTripartiteGraph read_weighted(const std::filesystem::path& path);

void write_graph(const Graph& g, std::ostream& out);
void write_graph(const TripartiteGraph& g, std::ostream& out);
void write_graph(const WeightedTripartiteGraph& g, std::ostream& out);

/// Writes to a temporary sibling and renames it into place.
void write_graph_file(const Graph& g, const std::filesystem::path& path);
void write_graph_file(const TripartiteGraph& g, const std::filesystem::path& path);
void write_graph_file(const WeightedTripartiteGraph& g, const std::filesystem::path& path);

/// Atomic write of an arbitrary text blob (tmp file + rename).
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace cyclescrub
