#include <doctest.h>

#include <regex>
#include <set>
#include <string>

#include "recourse/adversary.hpp"
#include "recourse/bmatch.hpp"
#include "recourse/dot_export.hpp"
#include "recourse/shortest_path.hpp"

using namespace recourse;

namespace {

struct DotCounts {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t doubled = 0;
  std::size_t dashed = 0;
};

DotCounts count(const std::string& dot) {
  static const std::regex node(R"(^  "[^"]+"( \[shape=doublecircle\])?;$)");
  static const std::regex edge(R"(^  "[^"]+" -> "[^"]+"( \[style=dashed\])?;$)");
  DotCounts c;
  std::size_t start = 0;
  while (start < dot.size()) {
    const std::size_t end = dot.find('\n', start);
    const std::string line = dot.substr(start, end - start);
    start = end + 1;
    std::smatch m;
    if (std::regex_match(line, m, node)) {
      ++c.nodes;
      c.doubled += m[1].matched;
    } else if (std::regex_match(line, m, edge)) {
      ++c.edges;
      c.dashed += m[1].matched;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("empty orientation") {
  const OrientationState s(2);
  CHECK(export_dot(s) == "digraph orientation {\n}\n");
}

TEST_CASE("three edges oriented toward the second endpoint") {
  ShortestPathOrienter sp(SpConfig{2, TiePolicy::toward_second(), TiePolicy::toward_first()});
  sp.process(0, 1);
  sp.process(2, 3);
  sp.process(1, 3);
  const std::string dot = export_dot(sp.view());
  CHECK(dot ==
        "digraph orientation {\n"
        "  \"0\";\n"
        "  \"1\";\n"
        "  \"2\";\n"
        "  \"3\" [shape=doublecircle];\n"
        "  \"0\" -> \"1\";\n"
        "  \"2\" -> \"3\";\n"
        "  \"1\" -> \"3\";\n"
        "}\n");
  const auto c = count(dot);
  CHECK(c.nodes == 4);
  CHECK(c.edges == 3);
  CHECK(c.doubled == 1);
}

TEST_CASE("a saturated-root tree t_2") {
  ShortestPathOrienter sp;
  AdversaryRun run(sp);
  const auto handle = build_tm(run, 2);
  const auto c = count(export_dot(sp.view()));
  CHECK(c.edges == tm_size(2));
  CHECK(c.nodes == tm_size(2) + 1);
  CHECK(sp.view().saturated(handle.root));
  CHECK(export_dot(sp.view()).find("\"" + std::to_string(handle.root) + "\" [shape=doublecircle]") !=
        std::string::npos);
}

TEST_CASE("b-matching in residual form") {
  OnlineBMatcher m(BMatchConfig{1, 2});
  CHECK(export_dot(m) == "digraph bmatching {\n}\n");
  const std::vector<NodeId> a{4, 7}, b{4};
  m.process_arrival(a);
  m.process_arrival(b);
  const std::string dot = export_dot(m);
  CHECK(dot ==
        "digraph bmatching {\n"
        "  \"l0\";\n"
        "  \"l1\";\n"
        "  \"r4\" [shape=doublecircle];\n"
        "  \"r7\";\n"
        "  \"r4\" -> \"l0\";\n"
        "  \"l0\" -> \"r7\" [style=dashed];\n"
        "  \"r4\" -> \"l1\";\n"
        "}\n");
  const auto c = count(dot);
  CHECK(c.nodes == 4);
  CHECK(c.edges == 3);
  CHECK(c.dashed == 1);
  CHECK(c.doubled == 1);
}
