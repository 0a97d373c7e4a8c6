#include "recourse/shortest_path.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "recourse/errors.hpp"

namespace recourse {

ShortestPathOrienter::ShortestPathOrienter(SpConfig config)
    : config_(std::move(config)), state_(config_.constraint) {
  if (config_.constraint < 2) {
    throw Error(ErrorKind::contract_violation, "in-degree constraint must be at least 2");
  }
}

std::string ShortestPathOrienter::name() const {
  return "orient-sp(c=" + std::to_string(config_.constraint) + ", " +
         config_.unsaturated_tie.name() + "/" + config_.path_tie.name() + ")";
}

StepRecord ShortestPathOrienter::process(NodeId u, NodeId v) {
  if (u == v) throw Error(ErrorKind::rejected_input, "self-loop on node " + std::to_string(u));
  if (state_.same_tree(u, v)) {
    throw Error(ErrorKind::acyclicity_violation,
                "edge {" + std::to_string(u) + ", " + std::to_string(v) + "} closes a cycle");
  }

  const bool u_saturated = state_.saturated(u);
  const bool v_saturated = state_.saturated(v);
  NodeId head = 0;
  std::size_t flips = 0;
  if (!u_saturated && !v_saturated) {
    head = config_.unsaturated_tie.pick(state_, u, v);
  } else if (!u_saturated || !v_saturated) {
    head = u_saturated ? v : u;
  } else {
    PathToUnsaturated to_u = state_.nearest_unsaturated(u);
    PathToUnsaturated to_v = state_.nearest_unsaturated(v);
    if (to_u.length() != to_v.length()) {
      head = to_u.length() < to_v.length() ? u : v;
    } else {
      head = config_.path_tie.pick(state_, u, v);
    }
    // Flip first so the head never exceeds the constraint, even transiently.
    flips = state_.flip_path(head == u ? to_u : to_v);
  }
  state_.insert_edge(u, v, head);

  if (state_.max_in_degree() > config_.constraint) {
    throw Error(ErrorKind::internal_consistency, "in-degree constraint exceeded");
  }
  cumulative_ += flips;
  return {steps_++, flips, cumulative_, state_.max_in_degree(), static_cast<std::uint32_t>(flips)};
}

void ShortestPathOrienter::count_extra_flips(StepRecord& record, std::uint64_t flips) {
  cumulative_ += flips;
  record.recourse += flips;
  record.cumulative_recourse = cumulative_;
  record.max_degree = state_.max_in_degree();
}

FixingShortestPathOrienter::FixingShortestPathOrienter(SpConfig config)
    : ShortestPathOrienter(std::move(config)) {}

std::string FixingShortestPathOrienter::name() const {
  return "fixing-" + ShortestPathOrienter::name();
}

StepRecord FixingShortestPathOrienter::process(NodeId u, NodeId v) {
  StepRecord record = ShortestPathOrienter::process(u, v);
  if (record.recourse != 0) return record;

  OrientationState& state = mutable_state();
  const std::uint32_t c = state.constraint();
  for (NodeId root : state.nodes()) {
    if (state.in_degree(root) < c) continue;
    std::optional<EdgeId> best;
    NodeId best_tail = 0;
    for (EdgeId id : state.in_edges(root)) {
      NodeId tail = state.edge(id).tail;
      if (state.in_degree(tail) + 2 > c) continue;
      if (!best || tail < best_tail) {
        best = id;
        best_tail = tail;
      }
    }
    if (best) {
      state.flip_edge(*best);
      ++free_flips_;
      count_extra_flips(record, 1);
      break;
    }
  }
  return record;
}

std::vector<StepRecord> sp_run_sequence(SpConfig config, std::span<const Edge> edges) {
  ShortestPathOrienter orienter(std::move(config));
  std::vector<StepRecord> trace;
  trace.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    try {
      trace.push_back(orienter.process(edges[i].u, edges[i].v));
    } catch (const Error& e) {
      throw e.at_step(i);
    }
  }
  return trace;
}

}  // namespace recourse
