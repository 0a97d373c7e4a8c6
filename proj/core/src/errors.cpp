#include "recourse/errors.hpp"

namespace recourse {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::rejected_input: return "rejected input";
    case ErrorKind::contract_violation: return "contract violation";
    case ErrorKind::internal_consistency: return "internal consistency";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::acyclicity_violation: return "acyclicity violation";
    case ErrorKind::arboricity_promise_violated: return "arboricity promise violated";
    case ErrorKind::adversary_desync: return "adversary desync";
    case ErrorKind::capacity_exceeded: return "capacity exceeded";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, std::size_t step)
    : std::runtime_error(message), kind_(kind), step_(step) {}

Error Error::at_step(std::size_t step) const {
  if (step_) return *this;
  return Error(kind_, "step " + std::to_string(step) + ": " + what(), step);
}

}  // namespace recourse
