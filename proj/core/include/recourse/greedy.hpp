#pragma once

#include <span>
#include <vector>

#include "recourse/driver.hpp"
#include "recourse/orientation_state.hpp"

namespace recourse {

/// No-recourse baseline: orient each edge towards the endpoint with the smaller
/// in-degree, ties towards the smaller NodeId. Accepts cyclic input.
class GreedyOrienter : public AlgorithmDriver {
 public:
  GreedyOrienter() = default;

  StepRecord process(NodeId u, NodeId v) override;
  const OrientationState& view() const override { return state_; }
  std::string name() const override { return "greedy"; }

 private:
  OrientationState state_;
  std::size_t steps_ = 0;
};

std::vector<StepRecord> greedy_run_sequence(std::span<const Edge> edges);

}  // namespace recourse
