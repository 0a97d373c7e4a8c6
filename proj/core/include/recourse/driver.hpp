#pragma once

#include <string>

#include "recourse/orientation_state.hpp"
#include "recourse/types.hpp"

namespace recourse {

/// An online orientation algorithm as seen by an adaptive adversary: it
/// consumes one edge at a time and exposes its state read-only in between.
class AlgorithmDriver {
 public:
  virtual ~AlgorithmDriver() = default;

  virtual StepRecord process(NodeId u, NodeId v) = 0;
  virtual const OrientationState& view() const = 0;
  virtual std::string name() const = 0;
  /// True if the algorithm may flip edges that no arrival forced.
  virtual bool makes_free_flips() const { return false; }
};

}  // namespace recourse
