#pragma once

#include <cstdint>

// Integer forms of the worst-case guarantees, shared by the run summaries and
// by `verify`. Real-valued bounds are floored, since the measured quantities
// are integers.
namespace recourse::bounds {

bool is_power_of_two(std::uint64_t n);
std::uint32_t floor_log2(std::uint64_t n);  // n >= 1
std::uint32_t ceil_log2(std::uint64_t n);   // n >= 1
/// Largest p with base^p <= n (base >= 2, n >= 1).
std::uint32_t floor_log(std::uint64_t base, std::uint64_t n);

/// floor((n - log2 n - 1) / log2 c): total flips of the shortest-path
/// algorithm over n acyclic arrivals with in-degree constraint c.
std::uint64_t sp_total_flips(std::uint64_t n, std::uint32_t c);
/// floor(log_c n): flips in any single shortest-path step after n arrivals.
std::uint64_t sp_step_flips(std::uint64_t n, std::uint32_t c);
/// floor(log2(n + 1)): the greedy baseline needs 2^k - 1 edges for in-degree k.
std::uint64_t greedy_max_in_degree(std::uint64_t n);
/// floor(n (D + 1) / (D + 1 - 2 delta)) for the all-flip cascade.
std::uint64_t allflip_total_flips(std::uint64_t n, std::uint32_t delta, std::uint32_t max_in_degree);
/// floor(n C / (C - 1)^2) swaps for shortest augmenting paths with capacity C K.
std::uint64_t bmatch_total_swaps(std::uint64_t n, std::uint32_t relaxation);

}  // namespace recourse::bounds
