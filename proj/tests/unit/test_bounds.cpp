#include <doctest.h>

#include <cmath>
#include <initializer_list>

#include "recourse/bounds.hpp"

using namespace recourse::bounds;

TEST_CASE("integer logarithms") {
  CHECK(floor_log2(1) == 0);
  CHECK(floor_log2(1023) == 9);
  CHECK(floor_log2(1024) == 10);
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(1000) == 10);
  CHECK(ceil_log2(1024) == 10);
  CHECK(ceil_log2(1025) == 11);
  CHECK(floor_log(3, 8) == 1);
  CHECK(floor_log(3, 9) == 2);
  CHECK(floor_log(2, 1024) == 10);
  CHECK(floor_log(8, 1u << 30) == 10);
  CHECK(floor_log(10, ~0ull) == 19);
}

TEST_CASE("shortest-path total bound matches the real-valued formula") {
  CHECK(sp_total_flips(1000, 2) == 989);
  CHECK(sp_total_flips(1, 2) == 0);
  CHECK(sp_total_flips(2, 2) == 0);
  for (std::uint32_t c : {2u, 3u, 4u, 8u}) {
    for (std::uint64_t n = 1; n <= 5000; n += (n < 100 ? 1 : 37)) {
      const double x = (static_cast<double>(n) - std::log2(static_cast<double>(n)) - 1.0) / std::log2(static_cast<double>(c));
      const auto expected = static_cast<std::uint64_t>(std::floor(x + 1e-9));
      CHECK_MESSAGE(sp_total_flips(n, c) == expected, "n=" << n << " c=" << c);
    }
  }
}

TEST_CASE("per-step, greedy, all-flip and b-matching bounds") {
  CHECK(sp_step_flips(1000, 2) == 9);
  CHECK(sp_step_flips(1024, 2) == 10);
  CHECK(sp_step_flips(80, 3) == 3);
  CHECK(sp_step_flips(81, 3) == 4);
  CHECK(greedy_max_in_degree(1) == 1);
  CHECK(greedy_max_in_degree(7) == 3);
  CHECK(greedy_max_in_degree(8) == 3);
  CHECK(greedy_max_in_degree(15) == 4);
  CHECK(allflip_total_flips(10, 1, 2) == 30);
  CHECK(allflip_total_flips(10, 1, 3) == 20);
  CHECK(allflip_total_flips(10, 2, 4) == 50);
  CHECK(allflip_total_flips(10, 2, 5) == 30);
  CHECK(allflip_total_flips(7, 1, 3) == 14);
  CHECK(bmatch_total_swaps(100, 2) == 200);
  CHECK(bmatch_total_swaps(100, 3) == 75);
  CHECK(bmatch_total_swaps(101, 3) == 75);
  CHECK(bmatch_total_swaps(100, 4) == 44);
}
