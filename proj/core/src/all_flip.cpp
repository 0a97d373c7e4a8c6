#include "recourse/all_flip.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "recourse/errors.hpp"

namespace recourse {

void AllFlipConfig::validate() const {
  if (delta < 1) throw Error(ErrorKind::contract_violation, "delta must be at least 1");
  if (max_in_degree < 2 * delta) {
    throw Error(ErrorKind::contract_violation,
                "maintained bound " + std::to_string(max_in_degree) + " is below 2 * delta = " +
                    std::to_string(2 * delta));
  }
}

AllFlipOrienter::AllFlipOrienter(AllFlipConfig config)
    : config_(std::move(config)), state_(config_.max_in_degree) {
  config_.validate();
}

std::string AllFlipOrienter::name() const {
  return "orient-allflip(delta=" + std::to_string(config_.delta) +
         ", Delta=" + std::to_string(config_.max_in_degree) + ", " + config_.initial.name() + ")";
}

void AllFlipOrienter::enqueue_if_overfull(NodeId node) {
  if (state_.in_degree(node) <= config_.max_in_degree) return;
  auto it = std::lower_bound(queued_.begin(), queued_.end(), node);
  if (it != queued_.end() && *it == node) return;
  queued_.insert(it, node);
  queue_.push_back(node);
}

StepRecord AllFlipOrienter::process(NodeId u, NodeId v) {
  if (u == v) throw Error(ErrorKind::rejected_input, "self-loop on node " + std::to_string(u));

  const NodeId head = config_.initial.pick(state_, u, v);
  state_.insert_edge(u, v, head);
  enqueue_if_overfull(head);

  const std::uint64_t big = config_.max_in_degree + 1;
  const std::uint64_t slack = big - 2 * config_.delta;
  const std::uint64_t n = state_.edge_count();
  std::uint64_t flips = 0;
  std::uint32_t step_all_flips = 0;
  while (!queue_.empty()) {
    NodeId node = queue_.front();
    queue_.pop_front();
    queued_.erase(std::lower_bound(queued_.begin(), queued_.end(), node));
    if (state_.in_degree(node) <= config_.max_in_degree) continue;

    if (observer_) observer_(state_, node, false);
    std::vector<EdgeId> incoming(state_.in_edges(node).begin(), state_.in_edges(node).end());
    std::sort(incoming.begin(), incoming.end());
    for (EdgeId id : incoming) {
      state_.flip_edge(id);
      enqueue_if_overfull(state_.edge(id).head);
    }
    flips += incoming.size();
    ++step_all_flips;
    ++all_flips_;
    if (observer_) observer_(state_, node, true);

    // cumulative > n(D+1)/(D+1-2delta) + D + 1, in integers.
    if ((cumulative_ + flips) * slack > n * big + big * slack) {
      cumulative_ += flips;
      throw Error(ErrorKind::arboricity_promise_violated,
                  "flip budget exhausted after " + std::to_string(cumulative_) + " flips on " +
                      std::to_string(n) + " edges; input is not " +
                      std::to_string(config_.delta) + "-orientable");
    }
  }
  cumulative_ += flips;
  return {steps_++, flips, cumulative_, state_.max_in_degree(), step_all_flips};
}

std::vector<StepRecord> af_run_sequence(AllFlipConfig config, std::span<const Edge> edges) {
  AllFlipOrienter orienter(std::move(config));
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

PotentialDiagnostic af_potential(const OrientationState& state,
                                 std::span<const NodeId> reference_heads, std::uint32_t delta) {
  const auto edges = state.edges();
  if (reference_heads.size() != edges.size()) {
    throw Error(ErrorKind::contract_violation,
                "reference covers " + std::to_string(reference_heads.size()) + " edges, state has " +
                    std::to_string(edges.size()));
  }
  PotentialDiagnostic out{{reference_heads.begin(), reference_heads.end()}, 0};
  std::unordered_map<NodeId, std::uint32_t> reference_in;
  for (const OrientedEdge& e : edges) {
    NodeId ref = reference_heads[e.id];
    if (ref != e.head && ref != e.tail) {
      throw Error(ErrorKind::contract_violation,
                  "reference head of edge " + std::to_string(e.id) + " is not an endpoint");
    }
    if (++reference_in[ref] > delta) {
      throw Error(ErrorKind::contract_violation,
                  "reference orientation exceeds in-degree " + std::to_string(delta));
    }
    if (ref != e.head) ++out.psi;
  }
  return out;
}

}  // namespace recourse
