#include <doctest.h>

#include <string>

#include "recourse/errors.hpp"
#include "recourse/disjoint_sets.hpp"
#include "recourse/types.hpp"

using namespace recourse;

TEST_CASE("error carries kind and message") {
  const Error e(ErrorKind::infeasible, "nothing reachable");
  CHECK(e.kind() == ErrorKind::infeasible);
  CHECK_FALSE(e.step().has_value());
  CHECK(std::string(e.what()).find("nothing reachable") != std::string::npos);
  CHECK(std::string(e.what()).find("infeasible") != std::string::npos);
}

TEST_CASE("at_step annotates once") {
  const Error e = Error(ErrorKind::rejected_input, "bad").at_step(7);
  REQUIRE(e.step().has_value());
  CHECK(*e.step() == 7);
  CHECK(e.kind() == ErrorKind::rejected_input);
  const Error again = e.at_step(9);
  CHECK(*again.step() == 7);
  CHECK(std::string(again.what()).find("step 7") != std::string::npos);
}

TEST_CASE("every kind has a distinct name") {
  const ErrorKind all[] = {ErrorKind::rejected_input,       ErrorKind::contract_violation,
                           ErrorKind::internal_consistency, ErrorKind::infeasible,
                           ErrorKind::acyclicity_violation, ErrorKind::arboricity_promise_violated,
                           ErrorKind::adversary_desync,     ErrorKind::capacity_exceeded};
  for (std::size_t i = 0; i < std::size(all); ++i)
    for (std::size_t j = i + 1; j < std::size(all); ++j) CHECK(to_string(all[i]) != to_string(all[j]));
}

TEST_CASE("disjoint sets") {
  DisjointSets s;
  for (int i = 0; i < 6; ++i) s.add();
  CHECK(s.set_count() == 6);
  CHECK(s.unite(0, 1));
  CHECK(s.unite(2, 3));
  CHECK_FALSE(s.unite(1, 0));
  CHECK(s.unite(1, 3));
  CHECK(s.same(0, 2));
  CHECK_FALSE(s.same(0, 4));
  CHECK(s.set_size(3) == 4);
  CHECK(s.set_count() == 3);
}

TEST_CASE("step records compare by value") {
  StepRecord a{1, 2, 3, 2, 2};
  StepRecord b = a;
  CHECK(a == b);
  b.path_length = 0;
  CHECK_FALSE(a == b);
}
