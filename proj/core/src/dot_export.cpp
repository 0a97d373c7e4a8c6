#include "recourse/dot_export.hpp"

namespace recourse {

std::string export_dot(const OrientationState& state) {
  std::string out = "digraph orientation {\n";
  for (NodeId v : state.nodes()) {
    out += "  \"" + std::to_string(v) + "\"";
    if (state.saturated(v)) out += " [shape=doublecircle]";
    out += ";\n";
  }
  for (const OrientedEdge& e : state.edges()) {
    out += "  \"" + std::to_string(e.tail) + "\" -> \"" + std::to_string(e.head) + "\";\n";
  }
  out += "}\n";
  return out;
}

std::string export_dot(const OnlineBMatcher& matcher) {
  const std::uint32_t cap = matcher.config().capacity();
  std::string out = "digraph bmatching {\n";
  for (LeftId x = 0; x < matcher.left_count(); ++x) out += "  \"l" + std::to_string(x) + "\";\n";
  for (NodeId r : matcher.right_nodes()) {
    out += "  \"r" + std::to_string(r) + "\"";
    if (matcher.load(r) >= cap) out += " [shape=doublecircle]";
    out += ";\n";
  }
  for (LeftId x = 0; x < matcher.left_count(); ++x) {
    const NodeId m = matcher.match_of(x);
    const std::string l = "\"l" + std::to_string(x) + "\"";
    for (NodeId r : matcher.neighbors(x)) {
      const std::string rr = "\"r" + std::to_string(r) + "\"";
      out += r == m ? "  " + rr + " -> " + l + ";\n" : "  " + l + " -> " + rr + " [style=dashed];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace recourse
