#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "recourse/types.hpp"

namespace recourse {

/// How an arriving left node picks among unsaturated neighbours.
enum class PickPolicy { lowest_load_then_id, first_listed, random };

PickPolicy parse_pick_policy(std::string_view name);
std::string_view to_string(PickPolicy policy);

struct BMatchConfig {
  std::uint32_t K = 1;  // promised offline maximum load
  std::uint32_t C = 2;  // relaxation; right capacity is C * K
  PickPolicy pick = PickPolicy::lowest_load_then_id;
  std::uint64_t seed = 0;  // for PickPolicy::random

  std::uint32_t capacity() const { return C * K; }
  void validate() const;
};

/// Left nodes are numbered by arrival (0, 1, ...); right nodes keep their ids.
using LeftId = std::size_t;

/// Right node `right` moved from `from_left` to `to_left` during an augmentation.
struct Rematch {
  NodeId right = 0;
  LeftId from_left = 0;
  LeftId to_left = 0;
};

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Distances to the nearest unsaturated right node. A left node also counts
/// its own match as one step away, so heights stay finite whenever Hall's
/// condition holds for the current left set.
struct HeightReport {
  std::vector<std::uint32_t> left;           // by arrival index; kUnreachable if none
  std::map<NodeId, std::uint32_t> right;
  std::uint64_t phi = 0;                     // sum over finite left heights of (h - 1) / 2
  std::size_t unreachable_left = 0;
  /// tail_counts[h] = number of left nodes with height >= 2h + 1 (unreachable
  /// ones included), for h up to the largest finite left height.
  std::vector<std::size_t> tail_counts;
};

/// Online bipartite b-matching by shortest augmenting paths.
///
/// Residual arcs: a matched pair (x, y) gives y -> x, every other edge x -> y.
/// An arrival whose neighbours are all saturated is routed along a shortest
/// residual path to an unsaturated right node; each left node on the path
/// moves one step along it. BFS levels are scanned in ascending id order.
class OnlineBMatcher {
 public:
  explicit OnlineBMatcher(BMatchConfig config = {});

  /// Matches a new left node. Throws rejected_input on an empty neighbour set
  /// and infeasible (state unchanged) if no unsaturated right node is reachable.
  StepRecord process_arrival(std::span<const NodeId> neighbors);

  /// Multi-source BFS from all unsaturated right nodes over reversed residual
  /// arcs plus each left node's arc to its own match.
  HeightReport heights() const;

  const BMatchConfig& config() const { return config_; }
  std::size_t left_count() const { return left_.size(); }
  NodeId match_of(LeftId left) const;
  std::vector<NodeId> neighbors(LeftId left) const;  // ascending, deduplicated
  std::uint32_t load(NodeId right) const;
  std::uint32_t max_load() const { return max_load_; }
  std::uint64_t cumulative_swaps() const { return cumulative_; }
  std::vector<NodeId> right_nodes() const;  // ascending
  /// Loads recounted from the left matches alone.
  std::map<NodeId, std::uint32_t> recount_loads() const;

  /// Augmenting path of the last arrival: x_0, y_1, x_1, ..., y_k interleaved,
  /// as (left, right) id pairs along the path order.
  const std::vector<LeftId>& last_path_left() const { return last_left_; }
  const std::vector<NodeId>& last_path_right() const { return last_right_; }
  const std::vector<Rematch>& last_rematches() const { return last_rematches_; }

 private:
  using Slot = std::uint32_t;

  struct LeftNode {
    std::vector<Slot> neighbors;  // sorted by right id
    Slot match = 0;
  };
  struct RightNode {
    NodeId id = 0;
    std::vector<LeftId> matched;   // unordered
    std::vector<LeftId> adjacent;  // all left neighbours, arrival order
  };

  Slot ensure_right(NodeId id);
  bool unsaturated(Slot s) const { return right_[s].matched.size() < config_.capacity(); }
  void assign(LeftId left, Slot slot);
  void unassign(LeftId left);

  BMatchConfig config_;
  std::vector<LeftNode> left_;
  std::vector<RightNode> right_;
  std::unordered_map<NodeId, Slot> right_slots_;
  std::uint32_t max_load_ = 0;
  std::size_t steps_ = 0;
  std::uint64_t cumulative_ = 0;
  std::mt19937_64 rng_;

  std::vector<LeftId> last_left_;
  std::vector<NodeId> last_right_;
  std::vector<Rematch> last_rematches_;

  // BFS scratch.
  std::vector<std::uint32_t> left_stamp_, right_stamp_;
  std::vector<Slot> left_parent_;    // right slot that reached this left node
  std::vector<LeftId> right_parent_; // left node that reached this right slot
  std::uint32_t stamp_ = 0;
};

std::vector<StepRecord> bm_run_sequence(BMatchConfig config,
                                        std::span<const std::vector<NodeId>> arrivals);

/// Heights around one arrival, for the monotonicity checks.
struct ArrivalObservation {
  HeightReport before;
  HeightReport after;
  std::uint64_t swaps = 0;
  std::vector<Rematch> rematches;
};

struct MonotonicityVerdict {
  bool ok = true;
  std::optional<std::size_t> failing_step;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Checks, per observation: no node's height decreases; a right node moved
/// from x to x' satisfies height_after(x') >= height_before(x) + 2; and
/// phi_after >= phi_before + swaps.
MonotonicityVerdict bm_check_monotonicity(std::span<const ArrivalObservation> trace);

}  // namespace recourse
