#include "recourse/bmatch.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "recourse/errors.hpp"

namespace recourse {

PickPolicy parse_pick_policy(std::string_view name) {
  if (name == "lowest_load_then_id" || name == "lowest-load") return PickPolicy::lowest_load_then_id;
  if (name == "first_listed" || name == "first") return PickPolicy::first_listed;
  if (name == "random") return PickPolicy::random;
  throw Error(ErrorKind::rejected_input, "unknown pick policy '" + std::string(name) + "'");
}

std::string_view to_string(PickPolicy policy) {
  switch (policy) {
    case PickPolicy::lowest_load_then_id: return "lowest_load_then_id";
    case PickPolicy::first_listed: return "first_listed";
    case PickPolicy::random: return "random";
  }
  return "?";
}

void BMatchConfig::validate() const {
  if (K < 1) throw Error(ErrorKind::rejected_input, "K must be at least 1");
  if (C < 2) throw Error(ErrorKind::rejected_input, "C must be at least 2");
}

OnlineBMatcher::OnlineBMatcher(BMatchConfig config) : config_(config), rng_(config.seed) {
  config_.validate();
}

OnlineBMatcher::Slot OnlineBMatcher::ensure_right(NodeId id) {
  auto [it, inserted] = right_slots_.try_emplace(id, static_cast<Slot>(right_.size()));
  if (inserted) {
    right_.push_back(RightNode{id, {}, {}});
    right_stamp_.push_back(0);
    right_parent_.push_back(0);
  }
  return it->second;
}

void OnlineBMatcher::assign(LeftId left, Slot slot) {
  left_[left].match = slot;
  right_[slot].matched.push_back(left);
  max_load_ = std::max<std::uint32_t>(max_load_, static_cast<std::uint32_t>(right_[slot].matched.size()));
}

void OnlineBMatcher::unassign(LeftId left) {
  auto& list = right_[left_[left].match].matched;
  auto it = std::find(list.begin(), list.end(), left);
  if (it == list.end()) throw Error(ErrorKind::internal_consistency, "match lists out of sync");
  *it = list.back();
  list.pop_back();
}

StepRecord OnlineBMatcher::process_arrival(std::span<const NodeId> neighbors) {
  if (neighbors.empty()) throw Error(ErrorKind::rejected_input, "arrival with empty neighbour set");

  const LeftId x0 = left_.size();
  std::vector<Slot> listed;
  listed.reserve(neighbors.size());
  for (NodeId id : neighbors) listed.push_back(ensure_right(id));
  std::vector<Slot> sorted = listed;
  std::sort(sorted.begin(), sorted.end(),
            [&](Slot a, Slot b) { return right_[a].id < right_[b].id; });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  last_left_.assign(1, x0);
  last_right_.clear();
  last_rematches_.clear();

  // Direct match when any neighbour has room.
  std::optional<Slot> direct;
  switch (config_.pick) {
    case PickPolicy::lowest_load_then_id:
      for (Slot s : sorted) {
        if (!unsaturated(s)) continue;
        if (!direct || right_[s].matched.size() < right_[*direct].matched.size()) direct = s;
      }
      break;
    case PickPolicy::first_listed:
      for (Slot s : listed) {
        if (unsaturated(s)) { direct = s; break; }
      }
      break;
    case PickPolicy::random: {
      std::vector<Slot> open;
      for (Slot s : sorted)
        if (unsaturated(s)) open.push_back(s);
      if (!open.empty()) direct = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng_)];
      break;
    }
  }

  std::vector<Slot> path_right;  // y_1 .. y_k
  std::vector<LeftId> path_left{x0};  // x_0 .. x_{k-1}
  if (direct) {
    path_right.push_back(*direct);
  } else {
    // Level-synchronous BFS over residual arcs, levels scanned in id order.
    if (left_stamp_.size() < x0 + 1) {
      left_stamp_.resize(x0 + 1, 0);
      left_parent_.resize(x0 + 1, 0);
    }
    ++stamp_;
    left_stamp_[x0] = stamp_;
    std::vector<Slot> right_level;
    for (Slot s : sorted) {
      right_stamp_[s] = stamp_;
      right_parent_[s] = x0;
      right_level.push_back(s);
    }
    std::optional<Slot> target;
    std::vector<LeftId> left_level;
    while (!right_level.empty()) {
      for (Slot s : right_level) {
        if (unsaturated(s)) { target = s; break; }  // level is id-sorted
      }
      if (target) break;
      left_level.clear();
      for (Slot s : right_level) {
        for (LeftId x : right_[s].matched) {
          if (left_stamp_[x] == stamp_) continue;
          left_stamp_[x] = stamp_;
          left_parent_[x] = s;  // the only residual arc into x
          left_level.push_back(x);
        }
      }
      std::sort(left_level.begin(), left_level.end());
      right_level.clear();
      for (LeftId x : left_level) {
        for (Slot s : left_[x].neighbors) {
          if (s == left_[x].match || right_stamp_[s] == stamp_) continue;
          right_stamp_[s] = stamp_;
          right_parent_[s] = x;
          right_level.push_back(s);
        }
      }
      std::sort(right_level.begin(), right_level.end(),
                [&](Slot a, Slot b) { return right_[a].id < right_[b].id; });
    }
    if (!target) {
      throw Error(ErrorKind::infeasible,
                  "no unsaturated right node reachable; input does not admit a K-matching");
    }
    // Walk parents back: y_k <- x_{k-1} <- y_{k-1} <- ... <- x_0.
    std::vector<Slot> rs;
    std::vector<LeftId> ls;
    Slot y = *target;
    while (true) {
      rs.push_back(y);
      LeftId x = right_parent_[y];
      ls.push_back(x);
      if (x == x0) break;
      y = left_parent_[x];
    }
    std::reverse(rs.begin(), rs.end());
    std::reverse(ls.begin(), ls.end());
    path_right = std::move(rs);
    path_left = std::move(ls);
  }

  // Commit. x_i (i >= 1) moves from y_i to y_{i+1}; y_i passes from x_i to x_{i-1}.
  left_.push_back(LeftNode{sorted, 0});
  for (Slot s : sorted) right_[s].adjacent.push_back(x0);
  const std::size_t k = path_right.size();
  for (std::size_t i = k - 1; i >= 1; --i) {
    const LeftId xi = path_left[i];
    last_rematches_.push_back(Rematch{right_[path_right[i - 1]].id, xi, path_left[i - 1]});
    unassign(xi);
    assign(xi, path_right[i]);
  }
  assign(x0, path_right[0]);
  std::reverse(last_rematches_.begin(), last_rematches_.end());

  last_left_ = path_left;
  for (Slot s : path_right) last_right_.push_back(right_[s].id);

  const std::uint64_t swaps = k - 1;
  cumulative_ += swaps;
  if (max_load_ > config_.capacity()) {
    throw Error(ErrorKind::internal_consistency, "load exceeded capacity");
  }
  StepRecord rec;
  rec.step = steps_++;
  rec.recourse = swaps;
  rec.cumulative_recourse = cumulative_;
  rec.max_degree = max_load_;
  rec.path_length = static_cast<std::uint32_t>(2 * k - 1);
  return rec;
}

NodeId OnlineBMatcher::match_of(LeftId left) const {
  if (left >= left_.size()) throw Error(ErrorKind::contract_violation, "unknown left node");
  return right_[left_[left].match].id;
}

std::vector<NodeId> OnlineBMatcher::neighbors(LeftId left) const {
  if (left >= left_.size()) throw Error(ErrorKind::contract_violation, "unknown left node");
  std::vector<NodeId> ids;
  for (Slot s : left_[left].neighbors) ids.push_back(right_[s].id);
  return ids;
}

std::uint32_t OnlineBMatcher::load(NodeId right) const {
  auto it = right_slots_.find(right);
  return it == right_slots_.end() ? 0 : static_cast<std::uint32_t>(right_[it->second].matched.size());
}

std::vector<NodeId> OnlineBMatcher::right_nodes() const {
  std::vector<NodeId> ids;
  ids.reserve(right_.size());
  for (const auto& r : right_) ids.push_back(r.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::map<NodeId, std::uint32_t> OnlineBMatcher::recount_loads() const {
  std::map<NodeId, std::uint32_t> loads;
  for (const auto& r : right_) loads[r.id] = 0;
  for (const auto& l : left_) ++loads[right_[l.match].id];
  return loads;
}

HeightReport OnlineBMatcher::heights() const {
  std::vector<std::uint32_t> hl(left_.size(), kUnreachable);
  std::vector<std::uint32_t> hr(right_.size(), kUnreachable);
  // Queue entries: (is_left, index).
  std::deque<std::pair<bool, std::size_t>> queue;
  for (Slot s = 0; s < right_.size(); ++s) {
    if (unsaturated(s)) {
      hr[s] = 0;
      queue.emplace_back(false, s);
    }
  }
  while (!queue.empty()) {
    auto [is_left, idx] = queue.front();
    queue.pop_front();
    if (is_left) {
      // Only arc into x is match(x) -> x.
      Slot y = left_[idx].match;
      if (hr[y] == kUnreachable) {
        hr[y] = hl[idx] + 1;
        queue.emplace_back(false, y);
      }
    } else {
      // Every neighbour x reaches y: by its non-match edge, or directly when y
      // is its own match (an unsaturated match puts x at height 1).
      for (LeftId x : right_[idx].adjacent) {
        if (hl[x] != kUnreachable) continue;
        hl[x] = hr[idx] + 1;
        queue.emplace_back(true, x);
      }
    }
  }

  HeightReport report;
  report.left = hl;
  for (Slot s = 0; s < right_.size(); ++s) report.right[right_[s].id] = hr[s];
  std::uint32_t top = 0;
  for (std::uint32_t h : hl) {
    if (h == kUnreachable) {
      ++report.unreachable_left;
    } else {
      report.phi += (h - 1) / 2;
      top = std::max(top, h);
    }
  }
  if (!hl.empty()) {
    const std::size_t levels = top == 0 ? 1 : (top - 1) / 2 + 1;
    report.tail_counts.assign(levels, 0);
    for (std::uint32_t h : hl) {
      const std::size_t reach = h == kUnreachable ? levels - 1 : (h - 1) / 2;
      for (std::size_t j = 0; j <= reach && j < levels; ++j) ++report.tail_counts[j];
    }
  }
  return report;
}

std::vector<StepRecord> bm_run_sequence(BMatchConfig config,
                                        std::span<const std::vector<NodeId>> arrivals) {
  OnlineBMatcher matcher(config);
  std::vector<StepRecord> out;
  out.reserve(arrivals.size());
  for (std::size_t i = 0; i < arrivals.size(); ++i) {
    try {
      out.push_back(matcher.process_arrival(arrivals[i]));
    } catch (const Error& e) {
      throw e.at_step(i);
    }
  }
  return out;
}

MonotonicityVerdict bm_check_monotonicity(std::span<const ArrivalObservation> trace) {
  auto fail = [](std::size_t step, std::string why) {
    return MonotonicityVerdict{false, step, std::move(why)};
  };
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& ob = trace[i];
    if (ob.after.left.size() < ob.before.left.size()) return fail(i, "left nodes disappeared");
    for (std::size_t x = 0; x < ob.before.left.size(); ++x) {
      if (ob.after.left[x] < ob.before.left[x]) {
        return fail(i, "height of left node " + std::to_string(x) + " decreased");
      }
    }
    for (const auto& [id, h] : ob.before.right) {
      auto it = ob.after.right.find(id);
      if (it != ob.after.right.end() && it->second < h) {
        return fail(i, "height of right node " + std::to_string(id) + " decreased");
      }
    }
    for (const Rematch& r : ob.rematches) {
      if (r.from_left >= ob.before.left.size() || r.to_left >= ob.after.left.size()) {
        return fail(i, "rematch refers to an unknown left node");
      }
      const std::uint64_t was = ob.before.left[r.from_left];
      const std::uint64_t now = ob.after.left[r.to_left];
      if (was == kUnreachable || now < was + 2) {
        return fail(i, "swap gap below 2 at right node " + std::to_string(r.right));
      }
    }
    if (ob.after.phi < ob.before.phi + ob.swaps) return fail(i, "potential grew by less than the swaps");
  }
  return {};
}

}  // namespace recourse
