#include "recourse/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "recourse/disjoint_sets.hpp"
#include "recourse/errors.hpp"

namespace recourse {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw Error(ErrorKind::contract_violation, "rational must be non-negative with positive denominator");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::ceil() const { return (num_ + den_ - 1) / den_; }
std::int64_t Rational::floor() const { return num_ / den_; }

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Small operands only; the products stay far from overflow at oracle scale.
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string_view to_string(OracleMetric metric) {
  switch (metric) {
    case OracleMetric::min_max_indegree: return "min_max_indegree";
    case OracleMetric::min_max_load: return "min_max_load";
    case OracleMetric::arboricity: return "arboricity";
  }
  return "?";
}

OracleMetric parse_oracle_metric(std::string_view name) {
  if (name == "min_max_indegree" || name == "min-max-indegree") return OracleMetric::min_max_indegree;
  if (name == "min_max_load" || name == "min-max-load") return OracleMetric::min_max_load;
  if (name == "arboricity") return OracleMetric::arboricity;
  throw Error(ErrorKind::rejected_input, "unknown oracle metric '" + std::string(name) + "'");
}

namespace {

/// Thin wrapper over Boost's push-relabel max flow.
class FlowNetwork {
  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using Graph = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::directedS, boost::no_property,
      boost::property<boost::edge_capacity_t, long,
                      boost::property<boost::edge_residual_capacity_t, long,
                                      boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;

 public:
  using Arc = Traits::edge_descriptor;

  explicit FlowNetwork(std::size_t nodes) : g_(nodes) {}

  Arc add(std::size_t u, std::size_t v, long cap) {
    auto capacity = boost::get(boost::edge_capacity, g_);
    auto reverse = boost::get(boost::edge_reverse, g_);
    Arc e = boost::add_edge(u, v, g_).first;
    Arc r = boost::add_edge(v, u, g_).first;
    capacity[e] = cap;
    capacity[r] = 0;
    reverse[e] = r;
    reverse[r] = e;
    return e;
  }

  long max_flow(std::size_t s, std::size_t t) {
    return boost::push_relabel_max_flow(g_, boost::vertex(s, g_), boost::vertex(t, g_));
  }

  long flow(Arc e) const {
    return boost::get(boost::edge_capacity, g_)[e] - boost::get(boost::edge_residual_capacity, g_)[e];
  }

 private:
  Graph g_;
};

struct Compact {
  std::vector<NodeId> ids;                // index -> id, ascending
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

Compact compact(std::span<const Edge> edges) {
  Compact c;
  for (const Edge& e : edges) {
    if (e.u == e.v) throw Error(ErrorKind::rejected_input, "self-loop");
    c.ids.push_back(e.u);
    c.ids.push_back(e.v);
  }
  std::sort(c.ids.begin(), c.ids.end());
  c.ids.erase(std::unique(c.ids.begin(), c.ids.end()), c.ids.end());
  auto index = [&](NodeId id) {
    return static_cast<std::size_t>(std::lower_bound(c.ids.begin(), c.ids.end(), id) - c.ids.begin());
  };
  for (const Edge& e : edges) c.edges.emplace_back(index(e.u), index(e.v));
  return c;
}

/// Flow test: can every edge pick a head with all in-degrees <= d?
std::optional<std::vector<NodeId>> orient_within(const Compact& g, std::size_t d) {
  const std::size_t m = g.edges.size(), n = g.ids.size();
  const std::size_t s = m + n, t = s + 1;
  FlowNetwork net(t + 1);
  std::vector<std::pair<FlowNetwork::Arc, FlowNetwork::Arc>> choice;
  choice.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    net.add(s, i, 1);
    choice.emplace_back(net.add(i, m + g.edges[i].first, 1), net.add(i, m + g.edges[i].second, 1));
  }
  for (std::size_t v = 0; v < n; ++v) net.add(m + v, t, static_cast<long>(d));
  if (net.max_flow(s, t) != static_cast<long>(m)) return std::nullopt;
  std::vector<NodeId> heads(m);
  for (std::size_t i = 0; i < m; ++i) {
    heads[i] = net.flow(choice[i].first) == 1 ? g.ids[g.edges[i].first] : g.ids[g.edges[i].second];
  }
  return heads;
}

OracleReport indegree_by_flow(const Compact& g) {
  OracleReport r{"", OracleMetric::min_max_indegree, Rational(0), std::vector<NodeId>{}};
  if (g.edges.empty()) return r;
  std::vector<std::size_t> degree(g.ids.size(), 0);
  for (auto [a, b] : g.edges) {
    ++degree[a];
    ++degree[b];
  }
  std::size_t lo = (g.edges.size() + g.ids.size() - 1) / g.ids.size();
  std::size_t hi = *std::max_element(degree.begin(), degree.end());
  std::optional<std::vector<NodeId>> best = orient_within(g, hi);
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto w = orient_within(g, mid)) {
      hi = mid;
      best = std::move(w);
    } else {
      lo = mid + 1;
    }
  }
  if (!best || hi != lo) throw Error(ErrorKind::internal_consistency, "flow search did not converge");
  r.value = Rational(static_cast<std::int64_t>(hi));
  r.witness = std::move(best);
  return r;
}

OracleReport indegree_exhaustive(const Compact& g) {
  const std::size_t m = g.edges.size();
  if (m > kExhaustiveEdgeLimit) {
    throw Error(ErrorKind::capacity_exceeded,
                "exhaustive orientation search limited to " + std::to_string(kExhaustiveEdgeLimit) + " edges");
  }
  OracleReport r{"", OracleMetric::min_max_indegree, Rational(0), std::vector<NodeId>{}};
  if (m == 0) return r;
  // Gray-code walk over all 2^m orientations; bit i set means edge i points at `second`.
  std::vector<std::size_t> indeg(g.ids.size(), 0), hist(m + 1, 0);
  hist[0] = g.ids.size();
  std::size_t top = 0;
  auto bump = [&](std::size_t v, bool up) {
    --hist[indeg[v]];
    if (up) {
      ++indeg[v];
      top = std::max(top, indeg[v]);
    } else {
      --indeg[v];
    }
    ++hist[indeg[v]];
    while (hist[top] == 0) --top;
  };
  for (auto [a, b] : g.edges) bump(a, true);
  std::uint32_t mask = 0, best_mask = 0;
  std::size_t best = top;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t k = 1; k < total && best > 1; ++k) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(k));
    const auto [a, b] = g.edges[bit];
    mask ^= 1u << bit;
    const bool to_second = mask >> bit & 1u;
    bump(to_second ? a : b, false);
    bump(to_second ? b : a, true);
    if (top < best) {
      best = top;
      best_mask = mask;
    }
  }
  std::vector<NodeId> heads(m);
  for (std::size_t i = 0; i < m; ++i) {
    heads[i] = g.ids[(best_mask >> i & 1u) ? g.edges[i].second : g.edges[i].first];
  }
  r.value = Rational(static_cast<std::int64_t>(best));
  r.witness = std::move(heads);
  return r;
}

struct LoadInstance {
  std::vector<NodeId> right_ids;
  std::vector<std::vector<std::size_t>> adj;  // left -> right indices, deduplicated
};

LoadInstance compact(std::span<const std::vector<NodeId>> arrivals) {
  LoadInstance inst;
  for (const auto& nbrs : arrivals) {
    if (nbrs.empty()) throw Error(ErrorKind::rejected_input, "arrival with empty neighbour set");
    inst.right_ids.insert(inst.right_ids.end(), nbrs.begin(), nbrs.end());
  }
  std::sort(inst.right_ids.begin(), inst.right_ids.end());
  inst.right_ids.erase(std::unique(inst.right_ids.begin(), inst.right_ids.end()), inst.right_ids.end());
  for (const auto& nbrs : arrivals) {
    std::vector<std::size_t> row;
    for (NodeId id : nbrs) {
      row.push_back(static_cast<std::size_t>(
          std::lower_bound(inst.right_ids.begin(), inst.right_ids.end(), id) - inst.right_ids.begin()));
    }
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    inst.adj.push_back(std::move(row));
  }
  return inst;
}

std::optional<std::vector<NodeId>> assign_within(const LoadInstance& inst, std::size_t b) {
  const std::size_t nl = inst.adj.size(), nr = inst.right_ids.size();
  const std::size_t s = nl + nr, t = s + 1;
  FlowNetwork net(t + 1);
  std::vector<std::vector<FlowNetwork::Arc>> arcs(nl);
  for (std::size_t x = 0; x < nl; ++x) {
    net.add(s, x, 1);
    for (std::size_t y : inst.adj[x]) arcs[x].push_back(net.add(x, nl + y, 1));
  }
  for (std::size_t y = 0; y < nr; ++y) net.add(nl + y, t, static_cast<long>(b));
  if (net.max_flow(s, t) != static_cast<long>(nl)) return std::nullopt;
  std::vector<NodeId> witness(nl);
  for (std::size_t x = 0; x < nl; ++x) {
    for (std::size_t j = 0; j < arcs[x].size(); ++j) {
      if (net.flow(arcs[x][j]) == 1) witness[x] = inst.right_ids[inst.adj[x][j]];
    }
  }
  return witness;
}

}  // namespace

OracleReport min_max_indegree(std::span<const Edge> edges, IndegreeMode mode) {
  const Compact g = compact(edges);
  switch (mode) {
    case IndegreeMode::exhaustive:
      return indegree_exhaustive(g);
    case IndegreeMode::flow:
      return indegree_by_flow(g);
    case IndegreeMode::automatic:
      if (is_forest(edges)) {
        return OracleReport{"", OracleMetric::min_max_indegree, Rational(edges.empty() ? 0 : 1),
                            root_away_orientation(edges)};
      }
      return indegree_by_flow(g);
  }
  return {};
}

OracleReport min_max_load(std::span<const std::vector<NodeId>> arrivals) {
  const LoadInstance inst = compact(arrivals);
  OracleReport r{"", OracleMetric::min_max_load, Rational(0), std::vector<NodeId>{}};
  if (inst.adj.empty()) return r;
  std::size_t lo = (inst.adj.size() + inst.right_ids.size() - 1) / inst.right_ids.size();
  std::size_t hi = inst.adj.size();
  std::optional<std::vector<NodeId>> best = assign_within(inst, hi);
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto w = assign_within(inst, mid)) {
      hi = mid;
      best = std::move(w);
    } else {
      lo = mid + 1;
    }
  }
  if (!best) best = assign_within(inst, hi);
  r.value = Rational(static_cast<std::int64_t>(hi));
  r.witness = std::move(best);
  return r;
}

OracleReport min_max_load_exhaustive(std::span<const std::vector<NodeId>> arrivals) {
  if (arrivals.size() > kExhaustiveLeftLimit) {
    throw Error(ErrorKind::capacity_exceeded,
                "exhaustive assignment search limited to " + std::to_string(kExhaustiveLeftLimit) + " left nodes");
  }
  const LoadInstance inst = compact(arrivals);
  OracleReport r{"", OracleMetric::min_max_load, Rational(0), std::vector<NodeId>{}};
  const std::size_t nl = inst.adj.size();
  if (nl == 0) return r;
  std::vector<std::size_t> pick(nl, 0), load(inst.right_ids.size(), 0);
  std::size_t best = nl + 1;
  std::vector<std::size_t> best_pick;
  // Odometer over the product of neighbour lists.
  while (true) {
    std::fill(load.begin(), load.end(), 0);
    std::size_t top = 0;
    for (std::size_t x = 0; x < nl; ++x) top = std::max(top, ++load[inst.adj[x][pick[x]]]);
    if (top < best) {
      best = top;
      best_pick = pick;
    }
    std::size_t x = 0;
    while (x < nl && ++pick[x] == inst.adj[x].size()) pick[x++] = 0;
    if (x == nl) break;
  }
  std::vector<NodeId> witness(nl);
  for (std::size_t x = 0; x < nl; ++x) witness[x] = inst.right_ids[inst.adj[x][best_pick[x]]];
  r.value = Rational(static_cast<std::int64_t>(best));
  r.witness = std::move(witness);
  return r;
}

bool hall_condition(std::span<const std::vector<NodeId>> arrivals, std::uint32_t K) {
  if (arrivals.size() > kHallLeftLimit) {
    throw Error(ErrorKind::capacity_exceeded,
                "subset enumeration limited to " + std::to_string(kHallLeftLimit) + " left nodes");
  }
  const LoadInstance inst = compact(arrivals);
  const std::size_t nl = inst.adj.size();
  std::vector<bool> seen(inst.right_ids.size());
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << nl); ++s) {
    std::fill(seen.begin(), seen.end(), false);
    std::size_t covered = 0;
    for (std::size_t x = 0; x < nl; ++x) {
      if (!(s >> x & 1u)) continue;
      for (std::size_t y : inst.adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          ++covered;
        }
      }
    }
    if (covered * K < static_cast<std::size_t>(std::popcount(s))) return false;
  }
  return true;
}

OracleReport arboricity(std::span<const Edge> edges) {
  const Compact g = compact(edges);
  const std::size_t n = g.ids.size();
  if (n > kArboricityNodeLimit) {
    throw Error(ErrorKind::capacity_exceeded,
                "arboricity enumeration limited to " + std::to_string(kArboricityNodeLimit) + " nodes");
  }
  Rational best(0);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int size = std::popcount(s);
    if (size < 2) continue;
    std::int64_t inside = 0;
    for (auto [a, b] : g.edges) inside += (s >> a & 1u) && (s >> b & 1u);
    best = std::max(best, Rational(inside, size - 1));
  }
  return OracleReport{"", OracleMetric::arboricity, best, std::nullopt};
}

bool is_forest(std::span<const Edge> edges) {
  DisjointSets sets;
  std::unordered_map<NodeId, std::size_t> slot;
  auto at = [&](NodeId id) {
    auto [it, inserted] = slot.try_emplace(id, slot.size());
    if (inserted) sets.add();
    return it->second;
  };
  for (const Edge& e : edges) {
    if (e.u == e.v) return false;
    if (!sets.unite(at(e.u), at(e.v))) return false;
  }
  return true;
}

std::vector<NodeId> root_away_orientation(std::span<const Edge> edges) {
  if (!is_forest(edges)) throw Error(ErrorKind::acyclicity_violation, "edges do not form a forest");
  const Compact g = compact(edges);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.ids.size());  // (neighbour, edge)
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    adj[g.edges[i].first].emplace_back(g.edges[i].second, i);
    adj[g.edges[i].second].emplace_back(g.edges[i].first, i);
  }
  std::vector<NodeId> heads(g.edges.size());
  std::vector<bool> seen(g.ids.size(), false);
  // Indices ascend with ids, so each tree is rooted at its smallest node.
  for (std::size_t root = 0; root < g.ids.size(); ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (auto [w, i] : adj[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        heads[i] = g.ids[w];
        queue.push(w);
      }
    }
  }
  return heads;
}

}  // namespace recourse
