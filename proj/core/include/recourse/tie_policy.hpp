#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "recourse/orientation_state.hpp"

namespace recourse {

enum class Endpoint { first, second };

/// A free choice between the two endpoints of an arriving edge.
///
/// Used for "both endpoints unsaturated" orientation, for equal-length path
/// ties, and for the all-flip initial orientation. Random policies own their
/// generator, so copying a policy copies its stream position.
class TiePolicy {
 public:
  using Chooser = std::function<Endpoint(const OrientationState&, NodeId first, NodeId second)>;

  static TiePolicy toward_first();
  static TiePolicy toward_second();
  static TiePolicy random(std::uint64_t seed);
  static TiePolicy callback(std::string name, Chooser chooser);

  /// "first", "second" or "random" (the latter seeded with `seed`).
  static TiePolicy parse(std::string_view name, std::uint64_t seed);

  Endpoint choose(const OrientationState& state, NodeId first, NodeId second) {
    return chooser_(state, first, second);
  }
  NodeId pick(const OrientationState& state, NodeId first, NodeId second) {
    return choose(state, first, second) == Endpoint::first ? first : second;
  }

  const std::string& name() const { return name_; }

 private:
  TiePolicy(std::string name, Chooser chooser)
      : name_(std::move(name)), chooser_(std::move(chooser)) {}

  std::string name_;
  Chooser chooser_;
};

}  // namespace recourse
