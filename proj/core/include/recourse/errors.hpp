#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace recourse {

enum class ErrorKind {
  rejected_input,        // self-loop, empty neighbour set, malformed file
  contract_violation,    // caller broke a documented precondition
  internal_consistency,  // state no longer matches a cached view (stale path)
  infeasible,            // no unsaturated node reachable / Hall condition fails
  acyclicity_violation,  // edge closes a cycle where a forest is required
  arboricity_promise_violated,
  adversary_desync,      // driver behaved outside the adversary's model
  capacity_exceeded,     // brute-force oracle asked beyond its size limit
};

std::string_view to_string(ErrorKind kind) noexcept;

/// The single exception type thrown by the library. `kind()` drives the CLI
/// exit-code taxonomy; `step()` is set when a sequence runner rethrows.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> step() const noexcept { return step_; }

  /// Copy of this error annotated with the failing step index.
  Error at_step(std::size_t step) const;

 private:
  Error(ErrorKind kind, const std::string& message, std::size_t step);

  ErrorKind kind_;
  std::optional<std::size_t> step_;
};

}  // namespace recourse
