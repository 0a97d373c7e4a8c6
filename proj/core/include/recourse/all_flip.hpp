#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <span>
#include <vector>

#include "recourse/driver.hpp"
#include "recourse/orientation_state.hpp"
#include "recourse/tie_policy.hpp"

namespace recourse {

struct AllFlipConfig {
  /// Promised orientation bound: the input admits an orientation with all
  /// in-degrees <= delta.
  std::uint32_t delta = 1;
  /// Maintained bound; must be at least 2 * delta.
  std::uint32_t max_in_degree = 2;
  TiePolicy initial = TiePolicy::toward_first();

  /// Throws contract_violation unless delta >= 1 and max_in_degree >= 2 * delta.
  void validate() const;
};

/// Bad-edge count against a fixed reference orientation.
struct PotentialDiagnostic {
  std::vector<NodeId> reference_heads;  // indexed by EdgeId
  std::uint64_t psi = 0;
};

/// Orients each edge by the initial policy, then, while some node holds more
/// than `max_in_degree` in-edges, reverses all in-edges of the oldest such node
/// (FIFO). Accepts cyclic input.
///
/// If the cumulative input is not delta-orientable the cascade may run away;
/// it is cut off once cumulative flips exceed
/// n * (D + 1) / (D + 1 - 2 * delta) + D + 1 (D = max_in_degree) and
/// arboricity_promise_violated is thrown.
class AllFlipOrienter : public AlgorithmDriver {
 public:
  /// Called around every all-flip with the node being flipped; `after` is
  /// false before the reversal and true after it.
  using Observer = std::function<void(const OrientationState&, NodeId node, bool after)>;

  explicit AllFlipOrienter(AllFlipConfig config = {});

  StepRecord process(NodeId u, NodeId v) override;
  const OrientationState& view() const override { return state_; }
  std::string name() const override;

  void set_observer(Observer observer) { observer_ = std::move(observer); }
  const AllFlipConfig& config() const { return config_; }
  std::uint64_t all_flip_count() const { return all_flips_; }

 private:
  void enqueue_if_overfull(NodeId node);

  AllFlipConfig config_;
  OrientationState state_;
  Observer observer_;
  std::deque<NodeId> queue_;
  std::vector<NodeId> queued_;  // sorted set of queued nodes
  std::size_t steps_ = 0;
  std::uint64_t cumulative_ = 0;
  std::uint64_t all_flips_ = 0;
};

std::vector<StepRecord> af_run_sequence(AllFlipConfig config, std::span<const Edge> edges);

/// Number of edges whose head differs from `reference_heads` (indexed by edge
/// id). The reference must cover exactly the current edges, use only edge
/// endpoints as heads, and keep every in-degree <= delta.
PotentialDiagnostic af_potential(const OrientationState& state,
                                 std::span<const NodeId> reference_heads, std::uint32_t delta);

}  // namespace recourse
