#pragma once

#include <string>

#include "recourse/bmatch.hpp"
#include "recourse/orientation_state.hpp"

namespace recourse {

/// Graphviz digraph of an orientation: one line per node (saturated nodes are
/// drawn double-circled), one tail -> head line per edge in arrival order.
std::string export_dot(const OrientationState& state);

/// Graphviz digraph of a b-matching in residual form: left nodes l<i>, right
/// nodes r<id>; match edges r -> l solid, other edges l -> r dashed.
/// Saturated right nodes are double-circled.
std::string export_dot(const OnlineBMatcher& matcher);

}  // namespace recourse
