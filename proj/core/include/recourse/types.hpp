#pragma once

#include <cstddef>
#include <cstdint>

namespace recourse {

/// Node identifier. Nodes come into existence the first time an edge names them.
using NodeId = std::uint64_t;

/// Edge identifier: the 0-based position of the edge in its arrival sequence.
using EdgeId = std::size_t;

/// An undirected edge as it arrives, before any orientation is chosen.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Per-arrival trace record shared by every online algorithm in the library.
///
/// For the orientation algorithms `recourse` counts edge flips and
/// `max_degree` is the maximum in-degree. For b-matching `recourse` counts
/// swaps and `max_degree` is the maximum right-node load.
struct StepRecord {
  std::size_t step = 0;
  std::uint64_t recourse = 0;
  std::uint64_t cumulative_recourse = 0;
  std::uint32_t max_degree = 0;
  // Orientation: length of the flipped path (all-flip: number of all-flips).
  // B-matching: number of arcs on the augmenting path.
  std::uint32_t path_length = 0;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

}  // namespace recourse
