#include <doctest.h>

#include <deque>
#include <map>
#include <set>

#include "brute.hpp"
#include "recourse/all_flip.hpp"
#include "recourse/bounds.hpp"
#include "recourse/errors.hpp"
#include "recourse/generators.hpp"
#include "recourse/oracle.hpp"

using namespace recourse;

namespace {

// Straightforward FIFO cascade over a plain edge list, first-endpoint initial rule.
std::vector<std::uint64_t> reference_flips(const std::vector<Edge>& edges, std::uint32_t cap) {
  std::vector<std::pair<NodeId, NodeId>> arcs;  // (tail, head)
  std::vector<std::uint64_t> per_step;
  for (const Edge& e : edges) {
    arcs.emplace_back(e.v, e.u);
    std::deque<NodeId> queue;
    std::set<NodeId> queued;
    auto indeg = [&](NodeId x) {
      std::uint32_t d = 0;
      for (auto& a : arcs) d += a.second == x;
      return d;
    };
    if (indeg(e.u) > cap) {
      queue.push_back(e.u);
      queued.insert(e.u);
    }
    std::uint64_t flips = 0;
    while (!queue.empty()) {
      const NodeId x = queue.front();
      queue.pop_front();
      queued.erase(x);
      if (indeg(x) <= cap) continue;
      for (auto& a : arcs) {
        if (a.second != x) continue;
        std::swap(a.first, a.second);
        ++flips;
        if (indeg(a.second) > cap && !queued.count(a.second)) {
          queue.push_back(a.second);
          queued.insert(a.second);
        }
      }
    }
    per_step.push_back(flips);
  }
  return per_step;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(AllFlipOrienter(AllFlipConfig{0, 2, TiePolicy::toward_first()}), Error);
  CHECK_THROWS_AS(AllFlipOrienter(AllFlipConfig{2, 3, TiePolicy::toward_first()}), Error);
  CHECK_NOTHROW(AllFlipOrienter(AllFlipConfig{2, 4, TiePolicy::toward_first()}));
}

TEST_CASE("a star overflows and cascades") {
  AllFlipOrienter af(AllFlipConfig{1, 2, TiePolicy::toward_first()});
  af.process(0, 1);
  af.process(0, 2);
  CHECK(af.view().in_degree(0) == 2);
  const auto rec = af.process(0, 3);
  CHECK(rec.recourse == 3);
  CHECK(rec.path_length == 1);
  CHECK(af.view().in_degree(0) == 0);
  CHECK(rec.max_degree <= 2);
}

TEST_CASE("cascade matches a naive FIFO simulation") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto inst = arboricity_bounded(12, 1 + seed % 2, seed);
    const std::uint32_t delta = 1 + seed % 2;
    const std::uint32_t cap = 2 * delta;
    const auto expected = reference_flips(inst.edges, cap);
    const auto steps = af_run_sequence(AllFlipConfig{delta, cap, TiePolicy::toward_first()}, inst.edges);
    REQUIRE(steps.size() == expected.size());
    for (std::size_t i = 0; i < steps.size(); ++i) CHECK(steps[i].recourse == expected[i]);
  }
}

TEST_CASE("trees: at most 3n flips and the potential falls at every all-flip") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto edges = random_forest(400, seed);
    const auto reference = root_away_orientation(edges);
    AllFlipOrienter af(AllFlipConfig{1, 2, TiePolicy::parse(seed % 2 ? "first" : "random", seed)});
    std::uint64_t psi_before = 0;
    std::size_t drops_checked = 0;
    af.set_observer([&](const OrientationState& s, NodeId, bool after) {
      const auto psi = af_potential(s, std::span(reference).first(s.edge_count()), 1).psi;
      if (!after) {
        psi_before = psi;
      } else {
        CHECK(psi_before >= psi + 1);  // Delta + 1 - 2 delta = 1
        ++drops_checked;
      }
    });
    std::uint64_t total = 0;
    for (const Edge& e : edges) {
      const auto rec = af.process(e.u, e.v);
      CHECK(rec.max_degree <= 2);
      total = rec.cumulative_recourse;
    }
    CHECK(total <= 3 * edges.size());
    CHECK(drops_checked == af.all_flip_count());
  }
}

TEST_CASE("potential diagnostic validates its reference") {
  AllFlipOrienter af(AllFlipConfig{1, 2, TiePolicy::toward_first()});
  af.process(0, 1);
  af.process(2, 1);
  const std::vector<NodeId> good{1, 2};
  CHECK(af_potential(af.view(), good, 1).psi == 1);
  const std::vector<NodeId> too_short{1};
  CHECK_THROWS_AS(af_potential(af.view(), too_short, 1), Error);
  const std::vector<NodeId> outsider{7, 2};
  CHECK_THROWS_AS(af_potential(af.view(), outsider, 1), Error);
  const std::vector<NodeId> crowded{1, 1};
  CHECK_THROWS_AS(af_potential(af.view(), crowded, 1), Error);
}

TEST_CASE("bounded-arboricity instances stay within n(D+1)/(D+1-2 delta)") {
  const std::pair<std::uint32_t, std::uint32_t> params[] = {{1, 3}, {2, 4}, {2, 5}};
  for (auto [delta, cap] : params) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto inst = arboricity_bounded(12, delta, seed * 7 + cap);
      CHECK(arboricity(inst.edges).value.ceil() <= delta);
      const auto steps = af_run_sequence(AllFlipConfig{delta, cap, TiePolicy::random(seed)}, inst.edges);
      CHECK(steps.back().cumulative_recourse <= bounds::allflip_total_flips(inst.edges.size(), delta, cap));
      for (const auto& s : steps) CHECK(s.max_degree <= cap);
    }
  }
}

TEST_CASE("broken promise aborts the cascade") {
  // K_6: 15 edges cannot fit under in-degree 2 on 6 nodes, so the cascade never settles.
  std::vector<Edge> k6;
  for (NodeId a = 0; a < 6; ++a)
    for (NodeId b = a + 1; b < 6; ++b) k6.push_back({a, b});
  try {
    af_run_sequence(AllFlipConfig{1, 2, TiePolicy::toward_first()}, k6);
    FAIL("expected the promise violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::arboricity_promise_violated);
    CHECK(e.step().has_value());
  }
}
