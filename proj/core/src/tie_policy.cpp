#include "recourse/tie_policy.hpp"

#include <random>

#include "recourse/errors.hpp"

namespace recourse {

TiePolicy TiePolicy::toward_first() {
  return {"first", [](const OrientationState&, NodeId, NodeId) { return Endpoint::first; }};
}

TiePolicy TiePolicy::toward_second() {
  return {"second", [](const OrientationState&, NodeId, NodeId) { return Endpoint::second; }};
}

TiePolicy TiePolicy::random(std::uint64_t seed) {
  return {"random",
          [rng = std::mt19937_64(seed)](const OrientationState&, NodeId, NodeId) mutable {
            return (rng() >> 63) != 0 ? Endpoint::first : Endpoint::second;
          }};
}

TiePolicy TiePolicy::callback(std::string name, Chooser chooser) {
  if (!chooser) throw Error(ErrorKind::contract_violation, "empty tie callback");
  return {std::move(name), std::move(chooser)};
}

TiePolicy TiePolicy::parse(std::string_view name, std::uint64_t seed) {
  if (name == "first") return toward_first();
  if (name == "second") return toward_second();
  if (name == "random") return random(seed);
  throw Error(ErrorKind::rejected_input, "unknown tie policy '" + std::string(name) + "'");
}

}  // namespace recourse
