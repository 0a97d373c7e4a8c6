#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "recourse/driver.hpp"
#include "recourse/types.hpp"

namespace recourse {

/// One adversary session against a driver. Hands out fresh node ids, checks
/// every emitted edge is acyclic, and records the emitted sequence so it can be
/// replayed without the adaptive machinery.
class AdversaryRun {
 public:
  explicit AdversaryRun(AlgorithmDriver& driver);

  NodeId fresh();
  /// Feeds {u, v} to the driver. Throws adversary_desync if the edge would
  /// close a cycle in the driver's view.
  StepRecord emit(NodeId u, NodeId v);

  const OrientationState& view() const { return driver_.view(); }
  AlgorithmDriver& driver() { return driver_; }
  std::span<const Edge> emitted() const { return emitted_; }
  std::span<const StepRecord> steps() const { return steps_; }

 private:
  AlgorithmDriver& driver_;
  NodeId next_ = 0;
  std::vector<Edge> emitted_;
  std::vector<StepRecord> steps_;
};

/// Edge count of the forced t_m construction: 5 * 2^(m-1) - 2.
std::size_t tm_size(std::uint32_t m);

/// A tree whose root is saturated and whose nearest unsaturated node is
/// exactly m edges away (in-degree constraint 2).
struct TmHandle {
  NodeId root = 0;
  std::uint32_t m = 0;
  std::size_t edges_used = 0;
};

/// Forces the plain shortest-path rule (c = 2) to build a t_m on fresh nodes.
/// A driver with free flips can dissolve the saturated root; that surfaces as
/// adversary_desync.
TmHandle build_tm(AdversaryRun& run, std::uint32_t m);

struct SingleStepResult {
  std::uint64_t final_flips = 0;
  std::size_t edges = 0;
};

/// Two t_(log2 m) joined root to root: log2 m flips in one step, 5m - 3 edges.
/// `m` must be a power of two, at least 2.
SingleStepResult single_step_log_flips(AdversaryRun& run, std::uint64_t m);

struct LinearResult {
  std::size_t k = 0;
  std::size_t edges = 0;
  /// Flips over the k joining edges (the t_1 builds never flip).
  std::uint64_t forced_flips = 0;
};

/// k + 1 copies of t_1 with k = floor((n_budget - 3) / 4); each of the last k
/// roots is then joined to the first root, every join forcing a flip.
LinearResult linear_total_flips(AdversaryRun& run, std::size_t n_budget);

enum class SingleEdgeMode {
  /// Round m attaches two t_(2m-1) to the red edge's head, as in the original
  /// argument. Relies on favourable tie-breaking; rounds where the red edge
  /// does not flip are recorded, not fatal.
  paper,
  /// Tree depths are scheduled so every decision is strict and the red edge
  /// lies on the unique shortest path; works against any tie policy.
  robust,
};

struct SingleEdgeResult {
  EdgeId red_edge = 0;
  std::uint32_t red_flips = 0;
  std::size_t edges = 0;
  std::vector<std::uint32_t> dodged_rounds;  // 1-based rounds without a red flip
};

/// Closed-form edge budget: 1 + sum_m (2 |t_j(m)| + 2) with j(m) = 2m - 1
/// (paper) or 2m (robust).
std::size_t single_edge_budget(std::uint32_t k, SingleEdgeMode mode);

/// Depths of the trees attached in each robust round: rounds 1 and 2 attach a
/// (shallow, deep) pair, later rounds a single tree.
std::vector<std::vector<std::uint32_t>> single_edge_robust_schedule(std::uint32_t k);

SingleEdgeResult single_edge_flips(AdversaryRun& run, std::uint32_t k, SingleEdgeMode mode);

struct TwoFlipResult {
  std::uint64_t max_step_flips = 0;
  std::size_t max_step = 0;
  std::size_t edges = 0;
  std::size_t t1_from_chains = 0;  // t_1 trees found directly inside chains
  std::size_t head_pairings = 0;   // chain-head joins used to make t_1 trees
};

/// 16 chains of length L, turned into 8 t_1 trees, then joined pairwise three
/// times; the final join flips two edges. Requires L >= 18.
TwoFlipResult two_flip_forcer(AdversaryRun& run, std::size_t chain_length);

/// Static sequence of n edges that drives the greedy baseline to in-degree
/// floor(log2 n), or ceil(log2 n) when n = 2^k - 1.
std::vector<Edge> pairing_norecourse(std::size_t n);

}  // namespace recourse
