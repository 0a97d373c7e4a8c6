#include "recourse/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "recourse/disjoint_sets.hpp"
#include "recourse/errors.hpp"

namespace recourse {
namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t bound) {  // [0, bound)
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

}  // namespace

std::vector<Edge> random_forest(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t pool = n + 1 + n / 4;
  DisjointSets sets;
  for (std::size_t i = 0; i < pool; ++i) sets.add();
  std::vector<Edge> edges;
  edges.reserve(n);
  while (edges.size() < n) {
    const std::size_t a = uniform(rng, pool), b = uniform(rng, pool);
    if (!sets.unite(a, b)) continue;  // same tree (or a == b)
    edges.push_back(Edge{a, b});
  }
  return edges;
}

ArboricityInstance arboricity_bounded(std::size_t nodes, std::uint32_t c, std::uint64_t seed) {
  if (nodes < 2 || c < 1) throw Error(ErrorKind::rejected_input, "arboricity instance needs >= 2 nodes and c >= 1");
  std::mt19937_64 rng(seed);
  std::set<std::pair<NodeId, NodeId>> seen;
  ArboricityInstance inst;
  for (std::uint32_t t = 0; t < c; ++t) {
    // Random recursive tree over a random node order; each node points its
    // parent edge at itself, so this tree adds at most one to every in-degree.
    std::vector<NodeId> order(nodes);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < nodes; ++i) {
      const NodeId child = order[i], parent = order[uniform(rng, i)];
      if (!seen.emplace(std::min(child, parent), std::max(child, parent)).second) continue;
      inst.edges.push_back(uniform(rng, 2) ? Edge{parent, child} : Edge{child, parent});
      inst.witness_heads.push_back(child);
    }
  }
  std::vector<std::size_t> perm(inst.edges.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  ArboricityInstance out;
  for (std::size_t i : perm) {
    out.edges.push_back(inst.edges[i]);
    out.witness_heads.push_back(inst.witness_heads[i]);
  }
  return out;
}

BMatchInstance bmatch_feasible(std::size_t n, std::uint32_t K, std::uint64_t seed, std::uint32_t extra) {
  if (K < 1) throw Error(ErrorKind::rejected_input, "K must be at least 1");
  std::mt19937_64 rng(seed);
  BMatchInstance inst;
  if (n == 0) return inst;
  const std::size_t rights = (n + K - 1) / K;
  const std::size_t hot = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(rights))));
  // Slot s of the hidden assignment belongs to right node s / K.
  std::vector<std::size_t> slots(n);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  std::shuffle(slots.begin(), slots.end(), rng);
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId own = slots[i] / K;
    std::vector<NodeId> nbrs{own};
    const std::size_t count = uniform(rng, extra + 1);
    for (std::size_t j = 0; j < count; ++j) {
      const NodeId pick = uniform(rng, 4) != 0 ? uniform(rng, hot) : uniform(rng, rights);
      if (std::find(nbrs.begin(), nbrs.end(), pick) == nbrs.end()) nbrs.push_back(pick);
    }
    std::shuffle(nbrs.begin(), nbrs.end(), rng);
    inst.arrivals.push_back(std::move(nbrs));
    inst.witness.push_back(own);
  }
  return inst;
}

}  // namespace recourse
