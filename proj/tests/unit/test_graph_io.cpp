#include "doctest.h"

#include <sstream>

#include "cyclescrub/generators.hpp"
#include "cyclescrub/graph_io.hpp"
#include "reference.hpp"

using namespace cyclescrub;

namespace {

ParseError::Kind parse_failure(const std::string& text) {
  std::istringstream in(text);
  try {
    read_graph(in);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no parse error for: " << text);
  return ParseError::Kind::Malformed;
}

}  // namespace

TEST_CASE("plain round trip") {
  const Graph g = gen_random_bounded(40, 6, 2);
  std::ostringstream out;
  write_graph(g, out);
  std::istringstream in(out.str());
  CHECK(detect_format(in) == GraphFormat::Plain);
  std::istringstream again(out.str());
  CHECK(read_graph(again) == g);
}

TEST_CASE("tripartite and weighted round trips") {
  const TripartiteGraph tg = gen_random_tripartite(30, 5, 4);
  std::ostringstream out;
  write_graph(tg, out);
  std::istringstream probe(out.str());
  CHECK(detect_format(probe) == GraphFormat::Tripartite);
  std::istringstream in(out.str());
  CHECK(read_tripartite(in) == tg);

  const auto wg = gen_weighted_tripartite(4, 3, 3, 0.8, 5, 9);
  std::ostringstream wout;
  write_graph(wg, wout);
  std::istringstream wprobe(wout.str());
  CHECK(detect_format(wprobe) == GraphFormat::Weighted);
  std::istringstream win(wout.str());
  const auto back = read_weighted(win);
  CHECK(back.tripartite() == wg.tripartite());
  CHECK(back.weights() == wg.weights());
  std::int64_t largest = 0;
  for (auto w : wg.weights()) largest = std::max<std::int64_t>(largest, std::abs(w));
  CHECK(back.bound() == largest);
}

TEST_CASE("reader accepts reversed endpoints") {
  std::istringstream in("3 2\n2 0\n1 2\n");
  const Graph g = read_graph(in);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(1, 2));
}

TEST_CASE("parse errors carry a kind") {
  CHECK(parse_failure("") == ParseError::Kind::Malformed);
  CHECK(parse_failure("3 1\n1 1\n") == ParseError::Kind::SelfLoop);
  CHECK(parse_failure("3 2\n0 1\n1 0\n") == ParseError::Kind::DuplicateEdge);
  CHECK(parse_failure("3 1\n0 5\n") == ParseError::Kind::OutOfRange);
  CHECK(parse_failure("3 2\n0 1\n") == ParseError::Kind::Malformed);
  CHECK(parse_failure("3 1\n0 x\n") == ParseError::Kind::Malformed);

  std::istringstream part("2 1\nAA\n0 1\n");
  try {
    read_tripartite(part);
    FAIL("expected a part violation");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::PartViolation);
    CHECK(e.line() == 3);
  }
}

TEST_CASE("file writes are atomic and leave no temporaries") {
  const auto dir = ref::scratch_dir("graph_io");
  const Graph g = ref::cycle_graph(5);
  write_graph_file(g, dir / "c5.txt");
  CHECK(read_graph(dir / "c5.txt") == g);
  write_text_file(dir / "note.txt", "hello\n");
  CHECK(ref::slurp(dir / "note.txt") == "hello\n");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& entry : std::filesystem::directory_iterator(dir)) ++files;
  CHECK(files == 2);
}
