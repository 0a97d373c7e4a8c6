#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "recourse/disjoint_sets.hpp"
#include "recourse/types.hpp"

namespace recourse {

/// An edge with its current orientation. It contributes one to `head`'s in-degree.
struct OrientedEdge {
  EdgeId id = 0;
  NodeId tail = 0;
  NodeId head = 0;
  std::uint32_t flip_count = 0;
};

/// A directed path u' -> ... -> u along current edge orientations.
///
/// `nodes.front()` is the unsaturated node u', `nodes.back()` is the node the
/// search started from. `edges[i]` is oriented nodes[i] -> nodes[i+1].
struct PathToUnsaturated {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
};

/// Oriented-graph state shared by the orientation algorithms.
///
/// Tracks in-degrees (with an O(1) cached maximum), per-node in-edge lists for
/// the reverse search, and a union-find over connected components. The graph
/// only grows; flips never change components.
///
/// Not safe for concurrent readers: `same_tree` compresses union-find paths and
/// `nearest_unsaturated` reuses scratch buffers.
class OrientationState {
 public:
  explicit OrientationState(std::uint32_t constraint = 2);

  std::uint32_t constraint() const { return constraint_; }

  /// Appends edge {u, v} oriented towards `head` and returns its id.
  EdgeId insert_edge(NodeId u, NodeId v, NodeId head);

  /// Reverses one edge.
  void flip_edge(EdgeId id);

  /// Reverses every edge on `path` and returns the number of flips.
  /// Throws internal_consistency if the path is no longer oriented as recorded.
  std::size_t flip_path(const PathToUnsaturated& path);

  /// Shortest path from an unsaturated node to `u`, found by BFS from `u`
  /// over in-edges. Each BFS level is scanned in ascending NodeId order and the
  /// smallest unsaturated id on the first level that has one wins.
  PathToUnsaturated nearest_unsaturated(NodeId u) const;

  bool same_tree(NodeId u, NodeId v) const;

  bool contains(NodeId node) const { return slots_.contains(node); }
  std::uint32_t in_degree(NodeId node) const;
  bool saturated(NodeId node) const { return in_degree(node) >= constraint_; }

  std::uint32_t max_in_degree() const { return max_in_degree_; }
  /// O(V) recomputation of `max_in_degree()` from the edge list.
  std::uint32_t recompute_max_in_degree() const;

  /// In-degrees as currently cached.
  std::map<NodeId, std::uint32_t> snapshot_in_degrees() const;
  /// In-degrees recounted from the edge list alone.
  std::map<NodeId, std::uint32_t> recount_in_degrees() const;

  std::span<const OrientedEdge> edges() const { return edges_; }
  const OrientedEdge& edge(EdgeId id) const { return edges_.at(id); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Ids of the edges currently pointing into `node` (unordered).
  std::span<const EdgeId> in_edges(NodeId node) const;

  std::size_t node_count() const { return ids_.size(); }
  /// All nodes in ascending order.
  std::vector<NodeId> nodes() const;
  std::size_t component_count() const { return components_.set_count(); }

 private:
  using Slot = std::uint32_t;

  Slot slot_of(NodeId node) const;
  Slot ensure_slot(NodeId node);
  void raise_in_degree(Slot slot);
  void lower_in_degree(Slot slot);

  std::uint32_t constraint_;
  std::vector<OrientedEdge> edges_;
  std::unordered_map<NodeId, Slot> slots_;
  std::vector<NodeId> ids_;
  std::vector<std::vector<EdgeId>> in_edges_;
  std::vector<std::uint32_t> degree_histogram_;
  std::uint32_t max_in_degree_ = 0;
  mutable DisjointSets components_;

  // BFS scratch, indexed by slot.
  mutable std::vector<std::uint32_t> visit_stamp_;
  mutable std::vector<EdgeId> parent_edge_;
  mutable std::uint32_t stamp_ = 0;
};

}  // namespace recourse
