#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "recourse/types.hpp"

namespace recourse {

/// Exact non-negative fraction in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::int64_t ceil() const;
  std::int64_t floor() const;
  std::string str() const;  // "3/2" or "2"

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

enum class OracleMetric { min_max_indegree, min_max_load, arboricity };

std::string_view to_string(OracleMetric metric);
OracleMetric parse_oracle_metric(std::string_view name);

struct OracleReport {
  std::string instance_id;
  OracleMetric metric = OracleMetric::min_max_indegree;
  Rational value;
  /// min_max_indegree: head of each edge, input order.
  /// min_max_load: right node of each left node, arrival order.
  std::optional<std::vector<NodeId>> witness;
};

enum class IndegreeMode {
  automatic,   // forest fast path, otherwise flow
  exhaustive,  // all 2^m orientations, m <= kExhaustiveEdgeLimit
  flow,        // binary search over d with a max-flow feasibility test
};

inline constexpr std::size_t kExhaustiveEdgeLimit = 22;
inline constexpr std::size_t kExhaustiveLeftLimit = 8;
inline constexpr std::size_t kHallLeftLimit = 20;
inline constexpr std::size_t kArboricityNodeLimit = 14;

OracleReport min_max_indegree(std::span<const Edge> edges, IndegreeMode mode = IndegreeMode::automatic);

/// Smallest b such that each left node can take one listed right node with
/// every right load <= b. Empty neighbour sets are rejected.
OracleReport min_max_load(std::span<const std::vector<NodeId>> arrivals);
OracleReport min_max_load_exhaustive(std::span<const std::vector<NodeId>> arrivals);

/// |N(S)| * K >= |S| for every nonempty subset S of left nodes.
bool hall_condition(std::span<const std::vector<NodeId>> arrivals, std::uint32_t K);

/// max |E(J)| / (|V(J)| - 1) over induced subgraphs J with at least two nodes.
OracleReport arboricity(std::span<const Edge> edges);

bool is_forest(std::span<const Edge> edges);

/// Heads orienting every tree away from its smallest node; in-degree <= 1.
/// Throws acyclicity_violation when the edges contain a cycle.
std::vector<NodeId> root_away_orientation(std::span<const Edge> edges);

}  // namespace recourse
