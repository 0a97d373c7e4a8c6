#include "recourse/trace_file.hpp"

#include <algorithm>

#include <json.hpp>

#include "recourse/adversary.hpp"
#include "recourse/bounds.hpp"
#include "recourse/errors.hpp"

namespace recourse {
namespace {

using Json = nlohmann::ordered_json;

std::int64_t as_i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

BoundVerdict check(std::string name, std::string relation, std::int64_t limit, std::int64_t observed) {
  bool ok = false;
  if (relation == "<=") ok = observed <= limit;
  else if (relation == ">=") ok = observed >= limit;
  else ok = observed == limit;
  return BoundVerdict{std::move(name), std::move(relation), limit, observed, ok};
}

std::int64_t param_or(const TraceHeader& h, const std::string& key, std::int64_t fallback) {
  auto it = h.params.find(key);
  return it == h.params.end() ? fallback : it->second;
}

std::int64_t positive_param(const TraceHeader& h, const std::string& key, std::int64_t fallback, std::int64_t min) {
  const std::int64_t v = param_or(h, key, fallback);
  if (v < min) {
    throw Error(ErrorKind::rejected_input,
                "trace parameter " + key + " must be at least " + std::to_string(min));
  }
  return v;
}

void construction_claims(const TraceHeader& h, std::span<const StepRecord> steps, std::uint64_t total,
                         std::uint64_t max_step, std::uint64_t max_degree, std::vector<BoundVerdict>& out) {
  const std::string& kind = h.construction;
  if (kind.empty()) return;
  const std::int64_t steps_n = as_i64(steps.size());
  const std::int64_t p = positive_param(h, "param", 0, 1);
  if (kind == "tm") {
    out.push_back(check("construction_edges", "==", as_i64(tm_size(static_cast<std::uint32_t>(p))), steps_n));
  } else if (kind == "single-step") {
    const auto m = static_cast<std::uint64_t>(p);
    if (m < 2 || !bounds::is_power_of_two(m)) throw Error(ErrorKind::rejected_input, "single-step needs a power of two >= 2");
    out.push_back(check("construction_edges", "==", as_i64(5 * m - 3), steps_n));
    out.push_back(check("final_step_flips", "==", bounds::floor_log2(m),
                        steps.empty() ? 0 : as_i64(steps.back().recourse)));
  } else if (kind == "linear") {
    out.push_back(check("construction_edges", "<=", p, steps_n));
    out.push_back(check("forced_total_flips", ">=", p >= 3 ? (p - 3) / 4 : 0, as_i64(total)));
  } else if (kind == "single-edge") {
    const auto mode = param_or(h, "robust", 1) != 0 ? SingleEdgeMode::robust : SingleEdgeMode::paper;
    out.push_back(check("construction_edges", "<=",
                        as_i64(single_edge_budget(static_cast<std::uint32_t>(p), mode)), steps_n));
  } else if (kind == "two-flip") {
    out.push_back(check("construction_edges", "<=", 16 * p + 15, steps_n));
    out.push_back(check("max_step_flips", ">=", 2, as_i64(max_step)));
  } else if (kind == "pairing") {
    const auto n = static_cast<std::uint64_t>(p);
    const std::uint32_t expected =
        n >= 3 && bounds::is_power_of_two(n + 1) ? bounds::ceil_log2(n) : bounds::floor_log2(n);
    out.push_back(check("construction_edges", "==", p, steps_n));
    out.push_back(check("forced_max_in_degree", "==", expected, as_i64(max_degree)));
  } else {
    throw Error(ErrorKind::rejected_input, "unknown construction '" + kind + "'");
  }
}

Json step_json(const StepRecord& s) {
  Json j;
  j["record"] = "step";
  j["step"] = s.step;
  j["flips_or_swaps"] = s.recourse;
  j["cumulative"] = s.cumulative_recourse;
  j["max_indegree_or_load"] = s.max_degree;
  j["path_length"] = s.path_length;
  return j;
}

template <class T>
T field(const Json& j, const char* key, std::size_t line) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw Error(ErrorKind::rejected_input, "trace line " + std::to_string(line) + ": missing field '" + key + "'");
  }
  try {
    return it->template get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::rejected_input, "trace line " + std::to_string(line) + ": bad field '" + key + "'");
  }
}

}  // namespace

bool TraceSummary::all_ok() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const BoundVerdict& b) { return b.ok; });
}

std::vector<BoundVerdict> evaluate_bounds(const TraceHeader& h, std::span<const StepRecord> steps) {
  std::uint64_t total = 0, max_step = 0, max_degree = 0;
  for (const StepRecord& s : steps) {
    total += s.recourse;
    max_step = std::max(max_step, s.recourse);
    max_degree = std::max<std::uint64_t>(max_degree, s.max_degree);
  }
  const std::uint64_t n = steps.size();
  std::vector<BoundVerdict> out;
  const std::string& alg = h.algorithm;
  if (alg == "orient-sp" || alg == "orient-sp-fixing") {
    const auto c = static_cast<std::uint32_t>(positive_param(h, "c", 2, 2));
    out.push_back(check("max_in_degree", "<=", c, as_i64(max_degree)));
    // The fixing variant spends extra flips by design; only the plain rule carries these guarantees.
    if (alg == "orient-sp") {
      out.push_back(check("total_flips", "<=", as_i64(bounds::sp_total_flips(n, c)), as_i64(total)));
      out.push_back(check("step_flips", "<=", as_i64(bounds::sp_step_flips(n, c)), as_i64(max_step)));
    }
  } else if (alg == "greedy") {
    out.push_back(check("max_in_degree", "<=", as_i64(bounds::greedy_max_in_degree(n)), as_i64(max_degree)));
    out.push_back(check("total_flips", "==", 0, as_i64(total)));
  } else if (alg == "orient-allflip") {
    const auto delta = static_cast<std::uint32_t>(positive_param(h, "delta", 1, 1));
    const auto cap = static_cast<std::uint32_t>(positive_param(h, "Delta", 2 * delta, 2 * delta));
    out.push_back(check("max_in_degree", "<=", cap, as_i64(max_degree)));
    out.push_back(check("total_flips", "<=", as_i64(bounds::allflip_total_flips(n, delta, cap)), as_i64(total)));
  } else if (alg == "bmatch") {
    const auto K = positive_param(h, "K", 1, 1);
    const auto C = static_cast<std::uint32_t>(positive_param(h, "C", 2, 2));
    out.push_back(check("max_load", "<=", C * K, as_i64(max_degree)));
    out.push_back(check("total_swaps", "<=", as_i64(bounds::bmatch_total_swaps(n, C)), as_i64(total)));
  } else {
    throw Error(ErrorKind::rejected_input, "unknown algorithm '" + alg + "'");
  }
  construction_claims(h, steps, total, max_step, max_degree, out);
  return out;
}

Trace make_trace(TraceHeader header, std::vector<StepRecord> steps) {
  Trace t;
  header.n = steps.size();
  t.header = std::move(header);
  t.steps = std::move(steps);
  t.summary.steps = t.steps.size();
  for (const StepRecord& s : t.steps) {
    t.summary.total += s.recourse;
    t.summary.max = std::max<std::uint64_t>(t.summary.max, s.max_degree);
  }
  t.summary.bounds = evaluate_bounds(t.header, t.steps);
  return t;
}

TraceCheck verify_trace(const Trace& trace) {
  TraceCheck result;
  auto problem = [&](std::string what) {
    result.ok = false;
    result.problems.push_back(std::move(what));
  };
  if (trace.header.n != trace.steps.size()) {
    problem("header declares " + std::to_string(trace.header.n) + " arrivals but the trace has " +
            std::to_string(trace.steps.size()) + " steps");
  }
  std::uint64_t running = 0, max = 0;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const StepRecord& s = trace.steps[i];
    if (s.step != i) problem("step " + std::to_string(i) + " is numbered " + std::to_string(s.step));
    running += s.recourse;
    if (s.cumulative_recourse != running) {
      problem("step " + std::to_string(i) + ": cumulative " + std::to_string(s.cumulative_recourse) +
              " but prefix sum is " + std::to_string(running));
    }
    max = std::max<std::uint64_t>(max, s.max_degree);
  }
  const TraceSummary& sum = trace.summary;
  if (sum.steps != trace.steps.size()) problem("summary step count disagrees with the records");
  if (sum.total != running) problem("summary total " + std::to_string(sum.total) + " != " + std::to_string(running));
  if (sum.max != max) problem("summary max " + std::to_string(sum.max) + " != " + std::to_string(max));

  std::vector<BoundVerdict> fresh;
  try {
    fresh = evaluate_bounds(trace.header, trace.steps);
  } catch (const Error& e) {
    problem(e.what());
    return result;
  }
  for (const BoundVerdict& b : fresh) {
    if (!b.ok) {
      problem("bound " + b.name + " violated: " + std::to_string(b.observed) + " " + b.relation + " " +
              std::to_string(b.limit) + " fails");
    }
  }
  if (fresh != sum.bounds) problem("recorded bound verdicts differ from the recomputed ones");
  return result;
}

std::string serialize_trace(const Trace& trace) {
  std::string out;
  Json head;
  head["record"] = "header";
  head["algorithm"] = trace.header.algorithm;
  head["n"] = trace.header.n;
  head["construction"] = trace.header.construction;
  head["params"] = Json::object();
  for (const auto& [k, v] : trace.header.params) head["params"][k] = v;
  out += head.dump() + "\n";
  for (const StepRecord& s : trace.steps) out += step_json(s).dump() + "\n";
  Json sum;
  sum["record"] = "summary";
  sum["steps"] = trace.summary.steps;
  sum["total"] = trace.summary.total;
  sum["max"] = trace.summary.max;
  sum["bounds"] = Json::array();
  for (const BoundVerdict& b : trace.summary.bounds) {
    sum["bounds"].push_back(Json{{"name", b.name}, {"relation", b.relation}, {"limit", b.limit},
                                 {"observed", b.observed}, {"ok", b.ok}});
  }
  sum["ok"] = trace.summary.all_ok();
  out += sum.dump() + "\n";
  return out;
}

Trace parse_trace(std::string_view text) {
  Trace trace;
  bool saw_header = false, saw_summary = false;
  std::size_t line = 0, start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line;
    if (raw.empty()) continue;
    Json j = Json::parse(raw.begin(), raw.end(), nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw Error(ErrorKind::rejected_input, "trace line " + std::to_string(line) + ": not a JSON object");
    }
    const auto kind = field<std::string>(j, "record", line);
    if (saw_summary) throw Error(ErrorKind::rejected_input, "trace line " + std::to_string(line) + ": record after summary");
    if (kind == "header") {
      if (saw_header) throw Error(ErrorKind::rejected_input, "duplicate trace header");
      saw_header = true;
      trace.header.algorithm = field<std::string>(j, "algorithm", line);
      trace.header.n = field<std::uint64_t>(j, "n", line);
      trace.header.construction = field<std::string>(j, "construction", line);
      trace.header.params = field<std::map<std::string, std::int64_t>>(j, "params", line);
    } else if (!saw_header) {
      throw Error(ErrorKind::rejected_input, "trace must start with a header record");
    } else if (kind == "step") {
      StepRecord s;
      s.step = field<std::size_t>(j, "step", line);
      s.recourse = field<std::uint64_t>(j, "flips_or_swaps", line);
      s.cumulative_recourse = field<std::uint64_t>(j, "cumulative", line);
      s.max_degree = field<std::uint32_t>(j, "max_indegree_or_load", line);
      s.path_length = field<std::uint32_t>(j, "path_length", line);
      trace.steps.push_back(s);
    } else if (kind == "summary") {
      saw_summary = true;
      trace.summary.steps = field<std::uint64_t>(j, "steps", line);
      trace.summary.total = field<std::uint64_t>(j, "total", line);
      trace.summary.max = field<std::uint64_t>(j, "max", line);
      for (const Json& b : field<Json>(j, "bounds", line)) {
        trace.summary.bounds.push_back(BoundVerdict{field<std::string>(b, "name", line),
                                                    field<std::string>(b, "relation", line),
                                                    field<std::int64_t>(b, "limit", line),
                                                    field<std::int64_t>(b, "observed", line),
                                                    field<bool>(b, "ok", line)});
      }
    } else {
      throw Error(ErrorKind::rejected_input, "trace line " + std::to_string(line) + ": unknown record '" + kind + "'");
    }
  }
  if (!saw_header || !saw_summary) throw Error(ErrorKind::rejected_input, "trace needs a header and a summary record");
  return trace;
}

}  // namespace recourse
