#pragma once

#include <cstdint>
#include <vector>

#include "recourse/types.hpp"

namespace recourse {

/// n edges forming a forest, drawn by rejection over a pool of n + 1 + n/4
/// nodes. Deterministic for a given seed.
std::vector<Edge> random_forest(std::size_t n, std::uint64_t seed);

struct ArboricityInstance {
  std::vector<Edge> edges;
  /// Head of each edge in an orientation with every in-degree <= c.
  std::vector<NodeId> witness_heads;
};

/// Union of c random spanning trees on `nodes` nodes (duplicates dropped),
/// shuffled. Arboricity is at most c by construction.
ArboricityInstance arboricity_bounded(std::size_t nodes, std::uint32_t c, std::uint64_t seed);

struct BMatchInstance {
  std::vector<std::vector<NodeId>> arrivals;
  std::vector<NodeId> witness;  // a hidden assignment with every load <= K
};

/// n arrivals over ceil(n / K) right nodes with a hidden assignment of load
/// <= K, plus up to `extra` additional neighbours per arrival biased toward a
/// small hot set of right nodes.
BMatchInstance bmatch_feasible(std::size_t n, std::uint32_t K, std::uint64_t seed, std::uint32_t extra = 3);

}  // namespace recourse
