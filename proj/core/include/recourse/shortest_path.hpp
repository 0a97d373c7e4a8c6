#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "recourse/driver.hpp"
#include "recourse/orientation_state.hpp"
#include "recourse/tie_policy.hpp"

namespace recourse {

struct SpConfig {
  std::uint32_t constraint = 2;
  /// Orientation of an edge whose endpoints are both unsaturated.
  TiePolicy unsaturated_tie = TiePolicy::toward_first();
  /// Which side to flip when both shortest paths have equal length.
  TiePolicy path_tie = TiePolicy::toward_first();
};

/// Online orientation of an acyclic edge sequence keeping every in-degree at
/// most `constraint`. A violation is repaired by reversing the shorter of the
/// two paths from an unsaturated node to the edge's endpoints.
class ShortestPathOrienter : public AlgorithmDriver {
 public:
  explicit ShortestPathOrienter(SpConfig config = {});

  StepRecord process(NodeId u, NodeId v) override;
  const OrientationState& view() const override { return state_; }
  std::string name() const override;

  const SpConfig& config() const { return config_; }
  std::uint64_t cumulative_flips() const { return cumulative_; }

 protected:
  OrientationState& mutable_state() { return state_; }
  void count_extra_flips(StepRecord& record, std::uint64_t flips);

 private:
  SpConfig config_;
  OrientationState state_;
  std::size_t steps_ = 0;
  std::uint64_t cumulative_ = 0;
};

/// A "fixing" variant: on steps where no flip was forced it may spend one free
/// flip. It reverses the in-edge of a saturated node whose tail can absorb an
/// extra in-edge without saturating, which dissolves a shortest-path-1 tree in
/// one move. Smallest root id first, then smallest tail id.
class FixingShortestPathOrienter : public ShortestPathOrienter {
 public:
  explicit FixingShortestPathOrienter(SpConfig config = {});

  StepRecord process(NodeId u, NodeId v) override;
  std::string name() const override;
  bool makes_free_flips() const override { return true; }

  std::uint64_t free_flips() const { return free_flips_; }

 private:
  std::uint64_t free_flips_ = 0;
};

/// Runs a fresh `ShortestPathOrienter` over `edges`. Errors are rethrown with
/// the failing step index attached.
std::vector<StepRecord> sp_run_sequence(SpConfig config, std::span<const Edge> edges);

}  // namespace recourse
