#include "recourse/greedy.hpp"

#include <string>

#include "recourse/errors.hpp"

namespace recourse {

StepRecord GreedyOrienter::process(NodeId u, NodeId v) {
  if (u == v) throw Error(ErrorKind::rejected_input, "self-loop on node " + std::to_string(u));
  const auto du = state_.in_degree(u);
  const auto dv = state_.in_degree(v);
  NodeId head = du != dv ? (du < dv ? u : v) : std::min(u, v);
  state_.insert_edge(u, v, head);
  return {steps_++, 0, 0, state_.max_in_degree(), 0};
}

std::vector<StepRecord> greedy_run_sequence(std::span<const Edge> edges) {
  GreedyOrienter greedy;
  std::vector<StepRecord> trace;
  trace.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    try {
      trace.push_back(greedy.process(edges[i].u, edges[i].v));
    } catch (const Error& e) {
      throw e.at_step(i);
    }
  }
  return trace;
}

}  // namespace recourse
