#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "recourse/bounds.hpp"
#include "recourse/errors.hpp"
#include "recourse/generators.hpp"
#include "recourse/shortest_path.hpp"

using namespace recourse;

namespace {

SpConfig policy(const char* name, std::uint64_t seed, std::uint32_t c = 2) {
  SpConfig cfg;
  cfg.constraint = c;
  cfg.unsaturated_tie = TiePolicy::parse(name, seed);
  cfg.path_tie = TiePolicy::parse(name, seed + 1);
  return cfg;
}

}  // namespace

TEST_CASE("t_1 from three edges, then a forced flip") {
  ShortestPathOrienter sp(policy("second", 0));
  sp.process(0, 1);
  sp.process(2, 3);
  const auto third = sp.process(1, 3);
  CHECK(third.recourse == 0);
  CHECK(sp.view().in_degree(3) == 2);
  CHECK(sp.view().nearest_unsaturated(3).length() == 1);
  // A second t_1 on 4..7 and a join of the two saturated roots costs one flip.
  sp.process(4, 5);
  sp.process(6, 7);
  sp.process(5, 7);
  const auto join = sp.process(3, 7);
  CHECK(join.recourse == 1);
  CHECK(join.path_length == 1);
  CHECK(join.cumulative_recourse == 1);
  CHECK(sp.view().max_in_degree() == 2);
}

TEST_CASE("exactly one unsaturated endpoint takes the edge") {
  ShortestPathOrienter sp(policy("first", 0));
  sp.process(1, 0);  // -> 1
  sp.process(2, 0);  // first tie -> 2 (both unsaturated)
  sp.process(1, 3);  // -> 1, now saturated
  const auto rec = sp.process(1, 4);
  CHECK(rec.recourse == 0);
  CHECK(sp.view().edge(3).head == 4);
}

TEST_CASE("rejections") {
  ShortestPathOrienter sp;
  CHECK_THROWS_AS(sp.process(1, 1), Error);
  sp.process(1, 2);
  sp.process(2, 3);
  try {
    sp.process(3, 1);
    FAIL("cycle accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::acyclicity_violation);
  }
  CHECK_THROWS_AS(ShortestPathOrienter(policy("first", 0, 1)), Error);
  const std::vector<Edge> cyclic{{1, 2}, {2, 3}, {1, 3}};
  try {
    sp_run_sequence(SpConfig{}, cyclic);
    FAIL("cycle accepted");
  } catch (const Error& e) {
    REQUIRE(e.step().has_value());
    CHECK(*e.step() == 2);
  }
}

TEST_CASE("every step flips a shortest path, cross-checked by Floyd-Warshall") {
  const char* names[] = {"first", "second", "random"};
  for (std::uint64_t seed = 1; seed <= 24; ++seed) {
    const std::uint32_t c = seed % 4 == 0 ? 3 : 2;
    ShortestPathOrienter sp(policy(names[seed % 3], seed, c));
    const auto edges = random_forest(60, seed);
    std::uint64_t total = 0;
    for (const Edge& e : edges) {
      std::uint32_t expected = 0;
      if (sp.view().contains(e.u) && sp.view().contains(e.v) && sp.view().saturated(e.u) &&
          sp.view().saturated(e.v)) {
        expected = std::min(brute::sp_distance(sp.view(), e.u), brute::sp_distance(sp.view(), e.v));
      }
      const auto rec = sp.process(e.u, e.v);
      CHECK(rec.recourse == expected);
      total += rec.recourse;
      CHECK(rec.cumulative_recourse == total);
      CHECK(rec.max_degree <= c);
      CHECK(rec.recourse <= bounds::sp_step_flips(edges.size(), c));
    }
    CHECK(sp.view().snapshot_in_degrees() == brute::in_degrees(sp.view()));
    CHECK(total <= bounds::sp_total_flips(edges.size(), c));
  }
}

TEST_CASE("generalized constraint keeps the bound") {
  for (std::uint32_t c : {3u, 4u, 8u}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto edges = random_forest(2000, seed * 31 + c);
      const auto steps = sp_run_sequence(policy("random", seed, c), edges);
      CHECK(steps.back().cumulative_recourse <= bounds::sp_total_flips(edges.size(), c));
      for (const auto& s : steps) CHECK(s.max_degree <= c);
    }
  }
}

TEST_CASE("fixing variant spends at most one free flip per quiet step") {
  FixingShortestPathOrienter fx(policy("second", 0));
  CHECK(fx.makes_free_flips());
  fx.process(0, 1);  // -> 1
  fx.process(2, 1);  // -> 1 saturated; tails 0 and 2 have in-degree 0
  CHECK(fx.free_flips() == 1);
  CHECK(fx.view().in_degree(1) == 1);
  const auto edges = random_forest(300, 9);
  FixingShortestPathOrienter big(policy("random", 3));
  for (const Edge& e : edges) {
    const std::uint64_t before = big.free_flips();
    const auto rec = big.process(e.u, e.v);
    CHECK(big.free_flips() - before <= 1);
    CHECK(rec.max_degree <= 2);
  }
  CHECK(big.view().snapshot_in_degrees() == brute::in_degrees(big.view()));
}
