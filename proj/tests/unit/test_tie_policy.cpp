#include <doctest.h>

#include "recourse/errors.hpp"
#include "recourse/orientation_state.hpp"
#include "recourse/tie_policy.hpp"

using namespace recourse;

TEST_CASE("fixed policies") {
  OrientationState s;
  auto first = TiePolicy::toward_first();
  auto second = TiePolicy::toward_second();
  CHECK(first.pick(s, 3, 9) == 3);
  CHECK(second.pick(s, 3, 9) == 9);
  CHECK(first.name() != second.name());
}

TEST_CASE("random policy is reproducible per seed and uses both sides") {
  OrientationState s;
  auto a = TiePolicy::random(42);
  auto b = TiePolicy::random(42);
  int firsts = 0;
  for (int i = 0; i < 200; ++i) {
    const auto x = a.choose(s, 1, 2);
    CHECK(x == b.choose(s, 1, 2));
    firsts += x == Endpoint::first;
  }
  CHECK(firsts > 50);
  CHECK(firsts < 150);
}

TEST_CASE("callback policy and parsing") {
  OrientationState s;
  auto larger = TiePolicy::callback("larger", [](const OrientationState&, NodeId a, NodeId b) {
    return a > b ? Endpoint::first : Endpoint::second;
  });
  CHECK(larger.pick(s, 5, 2) == 5);
  CHECK(larger.pick(s, 2, 5) == 5);
  CHECK(larger.name() == "larger");
  CHECK(TiePolicy::parse("second", 0).pick(s, 1, 2) == 2);
  CHECK(TiePolicy::parse("first", 0).pick(s, 1, 2) == 1);
  CHECK_THROWS_AS(TiePolicy::parse("sideways", 0), Error);
}
