#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclescrub/oracle.hpp"
#include "cyclescrub/slicing.hpp"

namespace cyclescrub {

/// Which pair of sides plays the role of the queried edges.
enum class Orientation { BC, AB, AC };

std::pair<Part, Part> orientation_parts(Orientation o);
const char* orientation_name(Orientation o);
Orientation orientation_from_name(const std::string& name);

/// One slice with its oriented edges taken out: `graph` is the slice minus
/// those edges (local ids, see slice.global) and `queries` lists the removed
/// edges in global ids.
struct DistanceInstance {
  Slice slice;
  Graph graph;
  std::vector<Edge> queries;
  Orientation orientation = Orientation::BC;
  int k = 4;  // no-case threshold
};

/// One instance per slice that has at least one oriented edge, flat order.
std::vector<DistanceInstance> make_distance_instances(const RemovalReport& report,
                                                      Orientation orientation = Orientation::BC);

/// Distance estimates keyed by (instance position, queried global edge);
/// nullopt means unreachable.
using DistanceAnswers = std::map<std::pair<std::size_t, Edge>, std::optional<std::uint64_t>>;

/// BFS distance between the endpoints of e in the instance graph.
std::optional<std::uint64_t> instance_distance(const DistanceInstance& inst, Edge e);

DistanceAnswers exact_bfs_answers(const std::vector<DistanceInstance>& instances);

struct EdgeMembership {
  std::vector<Edge> edges;  // every oriented edge of report.input, sorted
  EdgeFlags in_triangle;    // parallel to edges
};

/// Queries whose estimate is below k become candidates; a candidate is
/// confirmed by a common neighbor in its slice and then skipped by later
/// instances. Together with E' this decides triangle membership for every
/// oriented input edge. Throws std::invalid_argument on a missing answer.
EdgeMembership filter_candidates(const RemovalReport& report, const std::vector<DistanceInstance>& instances,
                                 const DistanceAnswers& answers, int k);

/// Answers file lines: `instance u v distance` with distance `inf` allowed.
void write_answers(const DistanceAnswers& answers, std::ostream& out);
DistanceAnswers read_answers(std::istream& in);

/// Update/query script over global tripartite ids. The INIT graph (the
/// first instance graph, in global ids) is returned separately so that the
/// caller can write it to `graph_file`.
struct UpdateScript {
  std::string text;
  Graph initial;
};

UpdateScript emit_update_sequence(const std::vector<DistanceInstance>& instances, std::size_t vertex_count,
                                  const std::string& graph_file);

/// Replays a script with exact BFS; phase i answers become instance i - 1.
/// `load` resolves the INIT file name.
DistanceAnswers replay_update_script(std::istream& script,
                                     const std::function<Graph(const std::string&)>& load);

struct GirthGapInstance {
  Slice slice;
  bool has_triangle = false;
};

/// Every slice with an edge, labelled by triangle presence. Requires a
/// report whose slices are 4-cycle-free.
std::vector<GirthGapInstance> girth_gap_instances(const RemovalReport& report);

}  // namespace cyclescrub
