#include "recourse/adversary.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "recourse/bounds.hpp"
#include "recourse/errors.hpp"
#include "recourse/greedy.hpp"

namespace recourse {
namespace {

Error desync(const std::string& what) { return Error(ErrorKind::adversary_desync, what); }

// Root saturated and exactly `depth` edges from its nearest unsaturated node.
void expect_tm(const OrientationState& view, NodeId root, std::uint32_t depth) {
  if (!view.saturated(root)) {
    throw desync("root " + std::to_string(root) + " is not saturated");
  }
  const auto length = view.nearest_unsaturated(root).length();
  if (length != depth) {
    throw desync("root " + std::to_string(root) + " has shortest path " + std::to_string(length) +
                 ", expected " + std::to_string(depth));
  }
}

NodeId head_of_last(const AdversaryRun& run) { return run.view().edges().back().head; }

}  // namespace

AdversaryRun::AdversaryRun(AlgorithmDriver& driver) : driver_(driver) {
  const auto existing = driver_.view().nodes();
  if (!existing.empty()) next_ = existing.back() + 1;
}

NodeId AdversaryRun::fresh() { return next_++; }

StepRecord AdversaryRun::emit(NodeId u, NodeId v) {
  if (driver_.view().same_tree(u, v)) {
    throw desync("edge {" + std::to_string(u) + ", " + std::to_string(v) + "} would close a cycle");
  }
  emitted_.push_back({u, v});
  StepRecord record = driver_.process(u, v);
  steps_.push_back(record);
  return record;
}

std::size_t tm_size(std::uint32_t m) { return 5 * (std::size_t{1} << (m - 1)) - 2; }

TmHandle build_tm(AdversaryRun& run, std::uint32_t m) {
  if (m < 1) throw Error(ErrorKind::contract_violation, "t_m needs m >= 1");
  if (run.view().constraint() != 2) {
    throw Error(ErrorKind::contract_violation, "t_m construction assumes in-degree constraint 2");
  }
  const std::size_t before = run.emitted().size();
  NodeId root = 0;
  if (m == 1) {
    // Whatever the free choices, joining the two heads saturates one of them.
    NodeId a = run.fresh(), b = run.fresh(), c = run.fresh(), d = run.fresh();
    run.emit(a, b);
    const NodeId first_head = head_of_last(run);
    run.emit(c, d);
    const NodeId second_head = head_of_last(run);
    run.emit(first_head, second_head);
    root = head_of_last(run);
  } else {
    const TmHandle left = build_tm(run, m - 1);
    const TmHandle right = build_tm(run, m - 1);
    root = run.fresh();
    run.emit(left.root, root);
    run.emit(right.root, root);
    if (head_of_last(run) != root || run.view().in_degree(root) != 2) {
      throw desync("joining edges were not oriented towards the fresh root");
    }
  }
  expect_tm(run.view(), root, m);
  return {root, m, run.emitted().size() - before};
}

SingleStepResult single_step_log_flips(AdversaryRun& run, std::uint64_t m) {
  if (m < 2 || !bounds::is_power_of_two(m)) {
    throw Error(ErrorKind::contract_violation, "m must be a power of two >= 2");
  }
  const auto depth = bounds::floor_log2(m);
  const std::size_t before = run.emitted().size();
  const TmHandle a = build_tm(run, depth);
  const TmHandle b = build_tm(run, depth);
  const StepRecord last = run.emit(a.root, b.root);
  return {last.recourse, run.emitted().size() - before};
}

LinearResult linear_total_flips(AdversaryRun& run, std::size_t n_budget) {
  if (n_budget < 7) throw Error(ErrorKind::contract_violation, "linear construction needs n >= 7");
  const std::size_t k = (n_budget - 3) / 4;
  const std::size_t before = run.emitted().size();
  std::vector<NodeId> roots;
  roots.reserve(k + 1);
  for (std::size_t i = 0; i <= k; ++i) roots.push_back(build_tm(run, 1).root);

  LinearResult result{k, 0, 0};
  for (std::size_t i = 1; i <= k; ++i) {
    if (!run.view().saturated(roots[0]) || !run.view().saturated(roots[i])) {
      throw desync("joined roots must both be saturated");
    }
    result.forced_flips += run.emit(roots[i], roots[0]).recourse;
  }
  result.edges = run.emitted().size() - before;
  return result;
}

std::size_t single_edge_budget(std::uint32_t k, SingleEdgeMode mode) {
  // 2 |t_j| + 2 = 5 * 2^j - 2, summed as a geometric series.
  const std::size_t four_k = std::size_t{1} << (2 * k);
  const std::size_t scale = mode == SingleEdgeMode::paper ? 10 : 20;
  return 1 + scale * (four_k - 1) / 3 - 2 * std::size_t{k};
}

std::vector<std::vector<std::uint32_t>> single_edge_robust_schedule(std::uint32_t k) {
  // deep[m] is the depth of the tree left behind in round m; deep[0] doubles
  // as the shallow tree of round 2 and deep[-1] as the shallow tree of round 1.
  // Round m's head is then 2 + deep[m-3] from its nearest unsaturated node.
  constexpr int kShallow1 = 1;
  constexpr int kShallow2 = 3;
  std::vector<int> deep(k + 3, 0);
  auto at = [&](int m) -> int& { return deep[static_cast<std::size_t>(m + 2)]; };
  at(-2) = -1;  // the red edge's tail, unsaturated: distance 0 = 2 + (-1) - 1
  at(-1) = kShallow1;
  at(0) = kShallow2;
  std::vector<std::vector<std::uint32_t>> schedule;
  for (int m = 1; m <= static_cast<int>(k); ++m) {
    int depth = at(m - 3) + 3;                                      // strictly deeper than the red side
    if (m + 1 <= static_cast<int>(k)) depth = std::max(depth, at(m - 2) + 1);  // next round routes via the older tree
    if (m + 2 <= static_cast<int>(k)) depth = std::max(depth, at(m - 1) + 2);  // survives as the far side two rounds on
    at(m) = depth;
    if (m == 1) schedule.push_back({kShallow1, static_cast<std::uint32_t>(depth)});
    else if (m == 2) schedule.push_back({kShallow2, static_cast<std::uint32_t>(depth)});
    else schedule.push_back({static_cast<std::uint32_t>(depth)});
  }
  return schedule;
}

SingleEdgeResult single_edge_flips(AdversaryRun& run, std::uint32_t k, SingleEdgeMode mode) {
  const std::size_t before = run.emitted().size();
  NodeId a = run.fresh(), b = run.fresh();
  run.emit(a, b);
  SingleEdgeResult result;
  result.red_edge = run.view().edge_count() - 1;

  std::vector<std::vector<std::uint32_t>> schedule;
  if (mode == SingleEdgeMode::robust) {
    schedule = single_edge_robust_schedule(k);
  } else {
    for (std::uint32_t m = 1; m <= k; ++m) schedule.push_back({2 * m - 1, 2 * m - 1});
  }

  for (std::uint32_t round = 1; round <= k; ++round) {
    const auto flips_before = run.view().edge(result.red_edge).flip_count;
    for (std::uint32_t depth : schedule[round - 1]) {
      const TmHandle tree = build_tm(run, depth);
      run.emit(tree.root, run.view().edge(result.red_edge).head);
    }
    if (run.view().edge(result.red_edge).flip_count == flips_before) {
      if (mode == SingleEdgeMode::robust) {
        throw desync("robust round " + std::to_string(round) + " did not flip the red edge");
      }
      result.dodged_rounds.push_back(round);
    }
  }
  result.red_flips = run.view().edge(result.red_edge).flip_count;
  result.edges = run.emitted().size() - before;
  return result;
}

namespace {

// A saturated node at shortest-path distance 1. Against an algorithm with free
// flips it must also be stable: every in-neighbour already has in-degree c - 1,
// so no single unforced flip can dissolve it.
bool is_usable_t1(const OrientationState& view, NodeId node, bool free_flips) {
  if (!view.saturated(node)) return false;
  for (EdgeId id : free_flips ? view.in_edges(node) : std::span<const EdgeId>{}) {
    if (view.in_degree(view.edge(id).tail) + 2 <= view.constraint()) return false;
  }
  return view.nearest_unsaturated(node).length() == 1;
}

struct ChainResource {
  std::optional<NodeId> t1_root;
  std::optional<NodeId> head;
};

// Inspects one chain v_0 .. v_L: either a t_1 already sits on it, or one of its
// ends is the head of a directed run long enough to survive a few free flips.
ChainResource classify_chain(const OrientationState& view, std::span<const NodeId> chain,
                             std::span<const EdgeId> links, std::size_t min_run, bool free_flips) {
  ChainResource out;
  for (NodeId node : chain) {
    if (is_usable_t1(view, node, free_flips)) {
      out.t1_root = node;
      return out;
    }
  }
  // Directed run ending at v_L (edges pointing forward) or at v_0 (backward).
  auto run_into = [&](bool forward) {
    std::size_t run = 0;
    for (std::size_t i = 0; i < links.size(); ++i) {
      const std::size_t idx = forward ? links.size() - 1 - i : i;
      const OrientedEdge& e = view.edge(links[idx]);
      const NodeId expected_head = forward ? chain[idx + 1] : chain[idx];
      if (e.head != expected_head) break;
      ++run;
    }
    return run;
  };
  const std::size_t forward = run_into(true);
  const std::size_t backward = run_into(false);
  if (std::max(forward, backward) >= min_run) {
    out.head = forward >= backward ? chain.back() : chain.front();
  }
  return out;
}

}  // namespace

TwoFlipResult two_flip_forcer(AdversaryRun& run, std::size_t chain_length) {
  if (chain_length < 18) {
    throw Error(ErrorKind::contract_violation, "two-flip construction needs chains of length >= 18");
  }
  constexpr std::size_t kChains = 16;
  constexpr std::size_t kTrees = 8;
  const std::size_t before = run.emitted().size();
  const bool free_flips = run.driver().makes_free_flips();

  std::vector<ChainResource> resources;
  for (std::size_t c = 0; c < kChains; ++c) {
    std::vector<NodeId> chain{run.fresh()};
    std::vector<EdgeId> links;
    for (std::size_t i = 0; i < chain_length; ++i) {
      chain.push_back(run.fresh());
      run.emit(chain[i], chain[i + 1]);
      links.push_back(run.view().edge_count() - 1);
    }
    resources.push_back(classify_chain(run.view(), chain, links, chain_length / 2, free_flips));
  }

  TwoFlipResult result;
  std::vector<NodeId> roots;
  std::vector<NodeId> heads;
  for (const auto& r : resources) {
    if (r.t1_root && roots.size() < kTrees) roots.push_back(*r.t1_root);
    else if (r.head) heads.push_back(*r.head);
  }
  result.t1_from_chains = roots.size();
  for (std::size_t i = 0; roots.size() < kTrees && i + 1 < heads.size(); i += 2) {
    run.emit(heads[i], heads[i + 1]);
    ++result.head_pairings;
    roots.push_back(head_of_last(run));
  }
  if (roots.size() < kTrees) {
    throw desync("only " + std::to_string(roots.size()) + " t_1 trees derivable from 16 chains");
  }
  for (NodeId root : roots) {
    if (!is_usable_t1(run.view(), root, free_flips)) throw desync("t_1 at " + std::to_string(root) + " was dissolved");
  }

  // 8 t_1 -> 4 -> 2 (shortest path 2 each) -> final join flips two edges.
  auto track = [&](const StepRecord& step) {
    if (step.recourse > result.max_step_flips) {
      result.max_step_flips = step.recourse;
      result.max_step = step.step;
    }
  };
  while (roots.size() > 1) {
    std::vector<NodeId> next;
    for (std::size_t i = 0; i + 1 < roots.size(); i += 2) {
      track(run.emit(roots[i], roots[i + 1]));
      next.push_back(head_of_last(run));
    }
    roots.swap(next);
  }
  result.edges = run.emitted().size() - before;
  return result;
}

std::vector<Edge> pairing_norecourse(std::size_t n) {
  std::vector<Edge> out;
  if (n == 0) return out;
  out.reserve(n);

  // Round r adds n / 2^r edges between the current maximum-in-degree nodes;
  // the quotients are rounded up when n = 2^k - 1 and down otherwise.
  const bool round_up = n >= 3 && bounds::is_power_of_two(n + 1);
  const std::uint32_t rounds = round_up ? bounds::floor_log2(n + 1) : bounds::floor_log2(n);
  GreedyOrienter greedy;
  NodeId next = 0;
  std::vector<NodeId> winners;
  auto add = [&](NodeId u, NodeId v) {
    out.push_back({u, v});
    greedy.process(u, v);
    return greedy.view().edges().back().head;
  };
  for (std::uint32_t r = 1; r <= rounds; ++r) {
    const std::size_t divisor = std::size_t{1} << r;
    const std::size_t count = round_up ? (n + divisor - 1) / divisor : n / divisor;
    std::vector<NodeId> next_winners;
    for (std::size_t i = 0; i < count; ++i) {
      if (r == 1) {
        NodeId u = next++;
        NodeId v = next++;
        next_winners.push_back(add(u, v));
      } else {
        next_winners.push_back(add(winners[2 * i], winners[2 * i + 1]));
      }
    }
    winners.swap(next_winners);
  }
  while (out.size() < n) {
    NodeId u = next++;
    NodeId v = next++;
    add(u, v);
  }
  return out;
}

}  // namespace recourse
