#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "recourse/errors.hpp"
#include "recourse/generators.hpp"
#include "recourse/orientation_state.hpp"

using namespace recourse;

TEST_CASE("insert, flip and degree bookkeeping") {
  OrientationState s(2);
  CHECK(s.edge_count() == 0);
  CHECK(s.max_in_degree() == 0);
  const EdgeId a = s.insert_edge(1, 2, 2);
  const EdgeId b = s.insert_edge(3, 2, 2);
  CHECK(a == 0);
  CHECK(b == 1);
  CHECK(s.in_degree(2) == 2);
  CHECK(s.in_degree(1) == 0);
  CHECK(s.saturated(2));
  CHECK_FALSE(s.saturated(1));
  CHECK(s.max_in_degree() == 2);
  s.flip_edge(a);
  CHECK(s.edge(a).head == 1);
  CHECK(s.edge(a).tail == 2);
  CHECK(s.edge(a).flip_count == 1);
  CHECK(s.in_degree(2) == 1);
  CHECK(s.max_in_degree() == 1);
  CHECK(s.recompute_max_in_degree() == 1);
  CHECK(s.snapshot_in_degrees() == s.recount_in_degrees());
  CHECK(s.node_count() == 3);
  CHECK(s.nodes() == std::vector<NodeId>{1, 2, 3});
  CHECK(s.component_count() == 1);
}

TEST_CASE("contract errors") {
  OrientationState s(2);
  CHECK_THROWS_AS(s.insert_edge(4, 4, 4), Error);
  try {
    s.insert_edge(1, 2, 3);
    FAIL("head outside the edge accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::contract_violation);
  }
  try {
    (void)s.nearest_unsaturated(99);
    FAIL("unknown node accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::contract_violation);
  }
}

TEST_CASE("same_tree follows union-find") {
  OrientationState s(2);
  s.insert_edge(1, 2, 2);
  s.insert_edge(3, 4, 4);
  CHECK(s.same_tree(1, 2));
  CHECK_FALSE(s.same_tree(1, 3));
  CHECK(s.same_tree(7, 7));
  CHECK_FALSE(s.same_tree(1, 7));
  s.insert_edge(2, 3, 3);
  CHECK(s.same_tree(1, 4));
  CHECK(s.component_count() == 1);
}

TEST_CASE("stale path is rejected") {
  OrientationState s(1);
  s.insert_edge(1, 2, 2);
  s.insert_edge(2, 3, 3);
  const auto path = s.nearest_unsaturated(3);
  REQUIRE(path.length() == 2);
  CHECK(path.nodes.front() == 1);
  CHECK(path.nodes.back() == 3);
  s.flip_edge(path.edges.front());
  try {
    s.flip_path(path);
    FAIL("stale path flipped");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::internal_consistency);
  }
}

TEST_CASE("cyclic saturated component has no unsaturated node") {
  OrientationState s(1);
  s.insert_edge(1, 2, 2);
  s.insert_edge(2, 3, 3);
  s.insert_edge(3, 1, 1);
  try {
    (void)s.nearest_unsaturated(1);
    FAIL("expected infeasible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::infeasible);
  }
}

TEST_CASE("nearest_unsaturated agrees with Floyd-Warshall, including the tie rule") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    std::mt19937_64 rng(seed);
    const std::uint32_t c = 1 + seed % 3;
    OrientationState s(c);
    for (const Edge& e : random_forest(25, seed)) s.insert_edge(e.u, e.v, rng() % 2 ? e.u : e.v);
    for (NodeId v : s.nodes()) {
      const auto expect = brute::sp_nearest(s, v);
      if (expect.distance == brute::kInf) {
        CHECK_THROWS_AS((void)s.nearest_unsaturated(v), Error);
        continue;
      }
      const auto path = s.nearest_unsaturated(v);
      CHECK(path.length() == expect.distance);
      CHECK(path.nodes.front() == expect.smallest);
      CHECK(path.nodes.back() == v);
      for (std::size_t i = 0; i < path.length(); ++i) {
        CHECK(s.edge(path.edges[i]).tail == path.nodes[i]);
        CHECK(s.edge(path.edges[i]).head == path.nodes[i + 1]);
      }
    }
    CHECK(s.snapshot_in_degrees() == brute::in_degrees(s));
  }
}

TEST_CASE("flipping a path moves one unit of in-degree from origin to the far end") {
  OrientationState s(2);
  // 1 -> 2 <- 3, 2 -> 4 <- 5: node 4 saturated, path 1 -> 2 -> 4 or 3 -> 2 -> 4.
  s.insert_edge(1, 2, 2);
  s.insert_edge(3, 2, 2);
  s.insert_edge(2, 4, 4);
  s.insert_edge(5, 4, 4);
  const auto path = s.nearest_unsaturated(4);
  CHECK(path.length() == 1);
  CHECK(path.nodes.front() == 5);
  const auto before = s.snapshot_in_degrees();
  CHECK(s.flip_path(path) == 1);
  CHECK(s.in_degree(4) == before.at(4) - 1);
  CHECK(s.in_degree(5) == before.at(5) + 1);
}
