#include "recourse/bounds.hpp"

#include <bit>
#include <cmath>

namespace recourse::bounds {

bool is_power_of_two(std::uint64_t n) { return std::has_single_bit(n); }

std::uint32_t floor_log2(std::uint64_t n) { return static_cast<std::uint32_t>(std::bit_width(n)) - 1; }

std::uint32_t ceil_log2(std::uint64_t n) { return n <= 1 ? 0 : floor_log2(n - 1) + 1; }

std::uint32_t floor_log(std::uint64_t base, std::uint64_t n) {
  std::uint32_t p = 0;
  for (std::uint64_t rest = n; rest >= base; rest /= base) ++p;
  return p;
}

std::uint64_t sp_total_flips(std::uint64_t n, std::uint32_t c) {
  if (n == 0) return 0;
  // floor(n - log2 n - 1) == n - 1 - ceil(log2 n), and floor(x / j) ==
  // floor(floor(x) / j) for a positive integer j.
  const std::uint64_t base = n - 1 - ceil_log2(n);
  if (is_power_of_two(c)) return base / floor_log2(c);
  const long double x = (static_cast<long double>(n) - 1.0L - std::log2(static_cast<long double>(n))) /
                        std::log2(static_cast<long double>(c));
  return x <= 0 ? 0 : static_cast<std::uint64_t>(std::floor(x));
}

std::uint64_t sp_step_flips(std::uint64_t n, std::uint32_t c) { return n == 0 ? 0 : floor_log(c, n); }

std::uint64_t greedy_max_in_degree(std::uint64_t n) { return floor_log2(n + 1); }

std::uint64_t allflip_total_flips(std::uint64_t n, std::uint32_t delta, std::uint32_t max_in_degree) {
  const std::uint64_t big = max_in_degree + 1ULL;
  return n * big / (big - 2ULL * delta);
}

std::uint64_t bmatch_total_swaps(std::uint64_t n, std::uint32_t relaxation) {
  const std::uint64_t c = relaxation;
  return n * c / ((c - 1) * (c - 1));
}

}  // namespace recourse::bounds
