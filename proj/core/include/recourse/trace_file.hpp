#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "recourse/types.hpp"

namespace recourse {

/// What produced a trace. `algorithm` is one of orient-sp, orient-sp-fixing,
/// orient-allflip, greedy, bmatch. `construction` names the adversary (tm,
/// single-step, linear, single-edge, two-flip, pairing) or is empty.
struct TraceHeader {
  std::string algorithm;
  std::uint64_t n = 0;  // arrivals
  std::string construction;
  std::map<std::string, std::int64_t> params;  // c, delta, Delta, K, C, param

  friend bool operator==(const TraceHeader&, const TraceHeader&) = default;
};

/// One checked inequality. `relation` is "<=", ">=" or "==", read as
/// `observed relation limit`.
struct BoundVerdict {
  std::string name;
  std::string relation;
  std::int64_t limit = 0;
  std::int64_t observed = 0;
  bool ok = false;

  friend bool operator==(const BoundVerdict&, const BoundVerdict&) = default;
};

struct TraceSummary {
  std::uint64_t steps = 0;
  std::uint64_t total = 0;
  std::uint64_t max = 0;
  std::vector<BoundVerdict> bounds;

  bool all_ok() const;
  friend bool operator==(const TraceSummary&, const TraceSummary&) = default;
};

struct Trace {
  TraceHeader header;
  std::vector<StepRecord> steps;
  TraceSummary summary;

  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Every guarantee that applies to the header's algorithm and construction,
/// recomputed from the step records alone.
std::vector<BoundVerdict> evaluate_bounds(const TraceHeader& header, std::span<const StepRecord> steps);

/// Builds a trace with a freshly computed summary.
Trace make_trace(TraceHeader header, std::vector<StepRecord> steps);

struct TraceCheck {
  bool ok = true;
  std::vector<std::string> problems;

  explicit operator bool() const { return ok; }
};

/// Checks internal consistency (step numbering, prefix sums, running maximum,
/// summary totals) and that every bound holds and matches the recorded verdicts.
TraceCheck verify_trace(const Trace& trace);

/// JSON lines: a header record, one record per step, then a summary record.
std::string serialize_trace(const Trace& trace);
/// Throws rejected_input on malformed text.
Trace parse_trace(std::string_view text);

}  // namespace recourse
