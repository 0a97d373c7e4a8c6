#include "recourse/orientation_state.hpp"

#include <algorithm>
#include <string>

#include "recourse/errors.hpp"

namespace recourse {

OrientationState::OrientationState(std::uint32_t constraint) : constraint_(constraint) {
  degree_histogram_.push_back(0);
}

OrientationState::Slot OrientationState::slot_of(NodeId node) const {
  auto it = slots_.find(node);
  if (it == slots_.end()) {
    throw Error(ErrorKind::contract_violation, "unknown node " + std::to_string(node));
  }
  return it->second;
}

OrientationState::Slot OrientationState::ensure_slot(NodeId node) {
  auto [it, inserted] = slots_.try_emplace(node, static_cast<Slot>(ids_.size()));
  if (inserted) {
    ids_.push_back(node);
    in_edges_.emplace_back();
    components_.add();
    visit_stamp_.push_back(0);
    parent_edge_.push_back(0);
    ++degree_histogram_[0];
  }
  return it->second;
}

void OrientationState::raise_in_degree(Slot slot) {
  auto degree = static_cast<std::uint32_t>(in_edges_[slot].size());  // after push
  --degree_histogram_[degree - 1];
  if (degree_histogram_.size() <= degree) degree_histogram_.resize(degree + 1, 0);
  ++degree_histogram_[degree];
  max_in_degree_ = std::max(max_in_degree_, degree);
}

void OrientationState::lower_in_degree(Slot slot) {
  auto degree = static_cast<std::uint32_t>(in_edges_[slot].size());  // after removal
  --degree_histogram_[degree + 1];
  ++degree_histogram_[degree];
  if (degree + 1 == max_in_degree_ && degree_histogram_[degree + 1] == 0) max_in_degree_ = degree;
}

EdgeId OrientationState::insert_edge(NodeId u, NodeId v, NodeId head) {
  if (u == v) {
    throw Error(ErrorKind::rejected_input, "self-loop on node " + std::to_string(u));
  }
  if (head != u && head != v) {
    throw Error(ErrorKind::contract_violation,
                "head " + std::to_string(head) + " is not an endpoint of {" + std::to_string(u) +
                    ", " + std::to_string(v) + "}");
  }
  Slot su = ensure_slot(u);
  Slot sv = ensure_slot(v);
  EdgeId id = edges_.size();
  NodeId tail = head == u ? v : u;
  edges_.push_back({id, tail, head, 0});
  Slot sh = head == u ? su : sv;
  in_edges_[sh].push_back(id);
  raise_in_degree(sh);
  components_.unite(su, sv);
  return id;
}

void OrientationState::flip_edge(EdgeId id) {
  OrientedEdge& e = edges_.at(id);
  Slot old_head = slot_of(e.head);
  Slot new_head = slot_of(e.tail);

  auto& incoming = in_edges_[old_head];
  auto it = std::find(incoming.begin(), incoming.end(), id);
  if (it == incoming.end()) {
    throw Error(ErrorKind::internal_consistency,
                "edge " + std::to_string(id) + " missing from in-edge list of its head");
  }
  *it = incoming.back();
  incoming.pop_back();
  lower_in_degree(old_head);

  in_edges_[new_head].push_back(id);
  raise_in_degree(new_head);

  std::swap(e.tail, e.head);
  ++e.flip_count;
}

std::size_t OrientationState::flip_path(const PathToUnsaturated& path) {
  if (path.nodes.size() != path.edges.size() + 1) {
    throw Error(ErrorKind::internal_consistency, "malformed path");
  }
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    const OrientedEdge& e = edges_.at(path.edges[i]);
    if (e.tail != path.nodes[i] || e.head != path.nodes[i + 1]) {
      throw Error(ErrorKind::internal_consistency,
                  "stale path: edge " + std::to_string(e.id) + " is no longer oriented " +
                      std::to_string(path.nodes[i]) + " -> " + std::to_string(path.nodes[i + 1]));
    }
  }
  for (EdgeId id : path.edges) flip_edge(id);
  return path.length();
}

PathToUnsaturated OrientationState::nearest_unsaturated(NodeId u) const {
  const Slot origin = slot_of(u);
  if (++stamp_ == 0) {
    std::fill(visit_stamp_.begin(), visit_stamp_.end(), 0);
    stamp_ = 1;
  }
  auto by_id = [this](Slot a, Slot b) { return ids_[a] < ids_[b]; };

  std::vector<Slot> frontier{origin};
  std::vector<Slot> next;
  visit_stamp_[origin] = stamp_;
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(), by_id);
    for (Slot s : frontier) {
      if (in_edges_[s].size() >= constraint_) continue;
      PathToUnsaturated path;
      for (Slot at = s; at != origin;) {
        const OrientedEdge& e = edges_[parent_edge_[at]];
        path.nodes.push_back(ids_[at]);
        path.edges.push_back(e.id);
        at = slots_.find(e.head)->second;
      }
      path.nodes.push_back(u);
      return path;
    }
    next.clear();
    for (Slot s : frontier) {
      for (EdgeId id : in_edges_[s]) {
        Slot t = slots_.find(edges_[id].tail)->second;
        if (visit_stamp_[t] == stamp_) continue;
        visit_stamp_[t] = stamp_;
        parent_edge_[t] = id;
        next.push_back(t);
      }
    }
    frontier.swap(next);
  }
  throw Error(ErrorKind::infeasible,
              "no unsaturated node reaches " + std::to_string(u) + " (cyclic input?)");
}

bool OrientationState::same_tree(NodeId u, NodeId v) const {
  if (u == v) return true;
  auto iu = slots_.find(u);
  auto iv = slots_.find(v);
  if (iu == slots_.end() || iv == slots_.end()) return false;
  return components_.same(iu->second, iv->second);
}

std::uint32_t OrientationState::in_degree(NodeId node) const {
  auto it = slots_.find(node);
  return it == slots_.end() ? 0 : static_cast<std::uint32_t>(in_edges_[it->second].size());
}

std::uint32_t OrientationState::recompute_max_in_degree() const {
  std::uint32_t best = 0;
  for (const auto& [node, degree] : recount_in_degrees()) best = std::max(best, degree);
  return best;
}

std::map<NodeId, std::uint32_t> OrientationState::snapshot_in_degrees() const {
  std::map<NodeId, std::uint32_t> out;
  for (Slot s = 0; s < ids_.size(); ++s) {
    out.emplace(ids_[s], static_cast<std::uint32_t>(in_edges_[s].size()));
  }
  return out;
}

std::map<NodeId, std::uint32_t> OrientationState::recount_in_degrees() const {
  std::map<NodeId, std::uint32_t> out;
  for (const OrientedEdge& e : edges_) {
    out.try_emplace(e.tail, 0);
    ++out[e.head];
  }
  return out;
}

std::span<const EdgeId> OrientationState::in_edges(NodeId node) const {
  auto it = slots_.find(node);
  if (it == slots_.end()) return {};
  return in_edges_[it->second];
}

std::vector<NodeId> OrientationState::nodes() const {
  std::vector<NodeId> out = ids_;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace recourse
