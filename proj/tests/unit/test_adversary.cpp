#include <doctest.h>

#include <bit>

#include "brute.hpp"
#include "recourse/adversary.hpp"
#include "recourse/errors.hpp"
#include "recourse/oracle.hpp"
#include "recourse/shortest_path.hpp"

using namespace recourse;

namespace {

SpConfig policy(const char* name, std::uint64_t seed) {
  SpConfig cfg;
  cfg.unsaturated_tie = TiePolicy::parse(name, seed);
  cfg.path_tie = TiePolicy::parse(name, seed ^ 0xabcdefULL);
  return cfg;
}

constexpr const char* kPolicies[] = {"first", "second", "random"};

}  // namespace

TEST_CASE("fresh ids and cycle guard") {
  ShortestPathOrienter sp;
  AdversaryRun run(sp);
  const NodeId a = run.fresh(), b = run.fresh(), c = run.fresh();
  CHECK(a != b);
  CHECK(b != c);
  run.emit(a, b);
  run.emit(b, c);
  try {
    run.emit(a, c);
    FAIL("cycle emitted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::adversary_desync);
  }
  CHECK(run.emitted().size() == 2);
  CHECK(run.steps().size() == 2);
  CHECK(run.fresh() > c);
}

TEST_CASE("t_m size and depth, checked by Floyd-Warshall") {
  for (std::uint32_t m = 1; m <= 12; ++m) CHECK(tm_size(m) == 5 * (std::size_t{1} << (m - 1)) - 2);
  for (const char* name : kPolicies) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      for (std::uint32_t m = 1; m <= 5; ++m) {
        ShortestPathOrienter sp(policy(name, seed));
        AdversaryRun run(sp);
        const TmHandle t = build_tm(run, m);
        CHECK(t.m == m);
        CHECK(t.edges_used == 5 * (std::size_t{1} << (m - 1)) - 2);
        CHECK(run.emitted().size() == t.edges_used);
        CHECK(sp.view().saturated(t.root));
        CHECK(brute::sp_distance(sp.view(), t.root) == m);
        CHECK(is_forest(std::vector<Edge>(run.emitted().begin(), run.emitted().end())));
      }
    }
  }
}

TEST_CASE("t_m needs c = 2") {
  SpConfig cfg;
  cfg.constraint = 3;
  ShortestPathOrienter sp(cfg);
  AdversaryRun run(sp);
  CHECK_THROWS_AS(build_tm(run, 2), Error);
}

TEST_CASE("single-step construction: log2 m flips with 5m - 3 edges") {
  for (const char* name : kPolicies) {
    for (std::uint64_t m = 2; m <= 256; m *= 2) {
      ShortestPathOrienter sp(policy(name, m));
      AdversaryRun run(sp);
      const auto r = single_step_log_flips(run, m);
      CHECK(r.edges == 5 * m - 3);
      CHECK(r.final_flips == static_cast<std::uint64_t>(std::countr_zero(m)));
      CHECK(run.steps().back().recourse == r.final_flips);
    }
  }
  ShortestPathOrienter sp;
  AdversaryRun run(sp);
  CHECK_THROWS_AS(single_step_log_flips(run, 6), Error);
  CHECK_THROWS_AS(single_step_log_flips(run, 1), Error);
}

TEST_CASE("linear construction forces a flip per join") {
  for (const char* name : kPolicies) {
    for (std::size_t n : {7u, 43u, 403u}) {
      ShortestPathOrienter sp(policy(name, n));
      AdversaryRun run(sp);
      const auto r = linear_total_flips(run, n);
      CHECK(r.k == (n - 3) / 4);
      CHECK(r.edges <= n);
      CHECK(r.forced_flips >= r.k);
      CHECK(run.steps().back().cumulative_recourse >= r.k);
    }
  }
}

TEST_CASE("single-edge budget: closed form equals direct summation") {
  for (std::uint32_t k = 1; k <= 6; ++k) {
    std::size_t paper = 1, robust = 1;
    for (std::uint32_t m = 1; m <= k; ++m) {
      paper += 2 * (5 * (std::size_t{1} << (2 * m - 2)) - 2) + 2;
      robust += 2 * (5 * (std::size_t{1} << (2 * m - 1)) - 2) + 2;
    }
    CHECK(single_edge_budget(k, SingleEdgeMode::paper) == paper);
    CHECK(single_edge_budget(k, SingleEdgeMode::robust) == robust);
  }
}

TEST_CASE("robust schedule stays inside the budget") {
  for (std::uint32_t k = 1; k <= 5; ++k) {
    const auto schedule = single_edge_robust_schedule(k);
    REQUIRE(schedule.size() == k);
    std::size_t edges = 1;
    for (const auto& round : schedule)
      for (std::uint32_t depth : round) edges += tm_size(depth) + 1;
    CHECK(edges <= single_edge_budget(k, SingleEdgeMode::robust));
  }
}

TEST_CASE("robust single-edge mode flips the red edge every round under any tie policy") {
  for (const char* name : kPolicies) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      for (std::uint32_t k = 1; k <= 4; ++k) {
        ShortestPathOrienter sp(policy(name, seed * 10 + k));
        AdversaryRun run(sp);
        const auto r = single_edge_flips(run, k, SingleEdgeMode::robust);
        CHECK(r.red_flips >= k);
        CHECK(r.dodged_rounds.empty());
        CHECK(r.edges <= single_edge_budget(k, SingleEdgeMode::robust));
      }
    }
  }
}

TEST_CASE("paper single-edge mode reports dodged rounds instead of failing") {
  for (const char* name : kPolicies) {
    ShortestPathOrienter sp(policy(name, 5));
    AdversaryRun run(sp);
    const auto r = single_edge_flips(run, 4, SingleEdgeMode::paper);
    CHECK(r.edges <= single_edge_budget(4, SingleEdgeMode::paper));
    CHECK(r.red_flips + r.dodged_rounds.size() >= 1);
    for (auto round : r.dodged_rounds) CHECK((round >= 1 && round <= 4));
  }
}

TEST_CASE("two-flip construction against plain and fixing variants") {
  for (const char* name : kPolicies) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      ShortestPathOrienter plain(policy(name, seed));
      AdversaryRun a(plain);
      const auto r1 = two_flip_forcer(a, 18);
      CHECK(r1.max_step_flips >= 2);
      CHECK(r1.edges <= 303);
      CHECK(r1.t1_from_chains + r1.head_pairings == 8);

      FixingShortestPathOrienter fixing(policy(name, seed));
      AdversaryRun b(fixing);
      const auto r2 = two_flip_forcer(b, 18);
      CHECK(r2.max_step_flips >= 2);
      CHECK(r2.edges <= 303);
    }
  }
  ShortestPathOrienter first(policy("first", 0));
  AdversaryRun run(first);
  CHECK(two_flip_forcer(run, 18).edges == 303);
  CHECK_THROWS_AS(two_flip_forcer(run, 17), Error);
}
