#include "recourse/cli.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "recourse/adversary.hpp"
#include "recourse/all_flip.hpp"
#include "recourse/bmatch.hpp"
#include "recourse/dot_export.hpp"
#include "recourse/errors.hpp"
#include "recourse/generators.hpp"
#include "recourse/greedy.hpp"
#include "recourse/oracle.hpp"
#include "recourse/sequence_file.hpp"
#include "recourse/shortest_path.hpp"
#include "recourse/trace_file.hpp"

namespace recourse::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::uint64_t seed = 0;
  std::uint32_t c = 2;
  std::uint32_t delta = 1;
  std::uint32_t Delta = 2;
  std::uint32_t K = 1;
  std::uint32_t C = 2;
  std::string policy;
  std::string construction;
  std::int64_t param = 0;
  std::string kind;
  std::size_t n = 0;
  std::string witness;
  std::string record;
  std::string metric;
  std::string algorithm = "orient-sp";
  std::string mode;
  std::size_t steps = 0;
  bool fixing = false;
};

/// Flags actually present on the command line, by long name.
struct Given {
  std::multimap<std::string, CLI::Option*> opts;  // every subcommand registers its own
  bool has(const std::string& name) const {
    auto [lo, hi] = opts.equal_range(name);
    for (auto it = lo; it != hi; ++it)
      if (it->second->count() > 0) return true;
    return false;
  }
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string read(const std::string& path) const {
    std::ostringstream buf;
    if (path == "-") {
      buf << in_.rdbuf();
    } else {
      std::ifstream file(path, std::ios::binary);
      if (!file) throw Error(ErrorKind::rejected_input, "cannot open '" + path + "'");
      buf << file.rdbuf();
    }
    return buf.str();
  }

  void write(const std::string& path, const std::string& text) const {
    if (path == "-") {
      out_ << text;
      out_.flush();
      return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text)) throw Error(ErrorKind::rejected_input, "cannot write '" + path + "'");
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::rejected_input:
    case ErrorKind::acyclicity_violation:
    case ErrorKind::capacity_exceeded:
      return kRejectedInput;
    case ErrorKind::infeasible:
    case ErrorKind::contract_violation:
    case ErrorKind::internal_consistency:
    case ErrorKind::arboricity_promise_violated:
    case ErrorKind::adversary_desync:
      return kInfeasible;
  }
  return kInfeasible;
}

SequenceFile read_sequence(const Io& io, const Options& o, SequenceKind want) {
  SequenceFile seq = parse_sequence(io.read(o.input));
  if (seq.kind != want) {
    throw Error(ErrorKind::rejected_input, "expected a " + std::string(to_string(want)) + " sequence");
  }
  return seq;
}

std::uint32_t header_u32(const SequenceFile& seq, const char* key, std::uint32_t fallback) {
  const std::int64_t v = seq.param(key, fallback);
  if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorKind::rejected_input, std::string("header parameter ") + key + " out of range");
  }
  return static_cast<std::uint32_t>(v);
}

std::vector<StepRecord> replay(AlgorithmDriver& driver, std::span<const Edge> edges, std::size_t limit) {
  std::vector<StepRecord> steps;
  const std::size_t count = std::min(limit, edges.size());
  steps.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    try {
      steps.push_back(driver.process(edges[i].u, edges[i].v));
    } catch (const Error& e) {
      throw e.at_step(i);
    }
  }
  return steps;
}

int emit_trace(const Io& io, const Options& o, TraceHeader header, std::vector<StepRecord> steps) {
  const Trace trace = make_trace(std::move(header), std::move(steps));
  io.write(o.output, serialize_trace(trace));
  return trace.summary.all_ok() ? kOk : kBoundViolated;
}

SpConfig sp_config(const Options& o, std::uint32_t c) {
  SpConfig config;
  config.constraint = c;
  const std::string name = o.policy.empty() ? "first" : o.policy;
  config.unsaturated_tie = TiePolicy::parse(name, o.seed);
  config.path_tie = TiePolicy::parse(name, o.seed ^ 0x9e3779b97f4a7c15ULL);
  return config;
}

std::unique_ptr<ShortestPathOrienter> make_sp(const Options& o, std::uint32_t c) {
  if (o.fixing) return std::make_unique<FixingShortestPathOrienter>(sp_config(o, c));
  return std::make_unique<ShortestPathOrienter>(sp_config(o, c));
}

AllFlipConfig allflip_config(const Options& o, const Given& g, const SequenceFile* seq) {
  AllFlipConfig config;
  config.delta = g.has("--delta") ? o.delta : seq ? header_u32(*seq, "delta", 1) : 1;
  config.max_in_degree = g.has("--Delta") ? o.Delta : seq ? header_u32(*seq, "Delta", 2 * config.delta) : 2 * config.delta;
  if (config.delta < 1 || config.max_in_degree < 2 * config.delta) {
    throw UsageError("--Delta must be at least 2 * --delta and --delta at least 1");
  }
  config.initial = TiePolicy::parse(o.policy.empty() ? "first" : o.policy, o.seed);
  return config;
}

int cmd_orient_sp(const Io& io, const Options& o, const Given& g) {
  const SequenceFile seq = read_sequence(io, o, SequenceKind::orientation);
  const std::uint32_t c = g.has("--c") ? o.c : header_u32(seq, "c", 2);
  if (c < 2) throw UsageError("--c must be at least 2");
  auto driver = make_sp(o, c);
  auto steps = replay(*driver, seq.edges, seq.edges.size());
  return emit_trace(io, o, TraceHeader{o.fixing ? "orient-sp-fixing" : "orient-sp", 0, "", {{"c", c}}},
                    std::move(steps));
}

int cmd_greedy(const Io& io, const Options& o, const Given&) {
  const SequenceFile seq = read_sequence(io, o, SequenceKind::orientation);
  GreedyOrienter driver;
  return emit_trace(io, o, TraceHeader{"greedy", 0, "", {}}, replay(driver, seq.edges, seq.edges.size()));
}

int cmd_allflip(const Io& io, const Options& o, const Given& g) {
  const SequenceFile seq = read_sequence(io, o, SequenceKind::orientation);
  const AllFlipConfig config = allflip_config(o, g, &seq);
  AllFlipOrienter driver(config);
  auto steps = replay(driver, seq.edges, seq.edges.size());
  return emit_trace(io, o,
                    TraceHeader{"orient-allflip", 0, "",
                                {{"delta", config.delta}, {"Delta", config.max_in_degree}}},
                    std::move(steps));
}

BMatchConfig bmatch_config(const Options& o, const Given& g, const SequenceFile& seq) {
  BMatchConfig config;
  config.K = g.has("--K") ? o.K : header_u32(seq, "K", 1);
  config.C = g.has("--C") ? o.C : header_u32(seq, "C", 2);
  if (config.K < 1 || config.C < 2) throw UsageError("--K must be at least 1 and --C at least 2");
  config.pick = o.policy.empty() ? PickPolicy::lowest_load_then_id : parse_pick_policy(o.policy);
  config.seed = o.seed;
  return config;
}

int cmd_bmatch(const Io& io, const Options& o, const Given& g) {
  const SequenceFile seq = read_sequence(io, o, SequenceKind::bmatching);
  const BMatchConfig config = bmatch_config(o, g, seq);
  auto steps = bm_run_sequence(config, seq.arrivals);
  return emit_trace(io, o, TraceHeader{"bmatch", 0, "", {{"K", config.K}, {"C", config.C}}}, std::move(steps));
}

int cmd_adversary(const Io& io, const Options& o, const Given& g) {
  if (!g.has("--param")) throw UsageError("adversary needs --param");
  if (o.param < 1 || o.param > (std::int64_t{1} << 30)) throw UsageError("--param out of range");
  const auto p = static_cast<std::uint64_t>(o.param);
  TraceHeader header{"orient-sp", 0, o.construction, {{"c", 2}, {"param", o.param}}};
  std::vector<Edge> emitted;
  std::vector<StepRecord> steps;

  if (o.construction == "pairing") {
    header.algorithm = "greedy";
    header.params.erase("c");
    emitted = pairing_norecourse(p);
    GreedyOrienter driver;
    steps = replay(driver, emitted, emitted.size());
  } else {
    auto driver = make_sp(o, 2);
    if (o.fixing) header.algorithm = "orient-sp-fixing";
    AdversaryRun run(*driver);
    if (o.construction == "tm") {
      if (p > 20) throw UsageError("tm needs --param <= 20");
      build_tm(run, static_cast<std::uint32_t>(p));
    } else if (o.construction == "single-step") {
      if (p < 2 || (p & (p - 1)) != 0) throw UsageError("single-step needs a power of two >= 2");
      single_step_log_flips(run, p);
    } else if (o.construction == "linear") {
      linear_total_flips(run, p);
    } else if (o.construction == "single-edge") {
      if (p > 8) throw UsageError("single-edge needs --param <= 8");
      const bool robust = o.mode.empty() || o.mode == "robust";
      if (!robust && o.mode != "paper") throw UsageError("--mode must be robust or paper");
      header.params["robust"] = robust ? 1 : 0;
      single_edge_flips(run, static_cast<std::uint32_t>(p), robust ? SingleEdgeMode::robust : SingleEdgeMode::paper);
    } else if (o.construction == "two-flip") {
      if (p < 18) throw UsageError("two-flip needs --param >= 18");
      two_flip_forcer(run, p);
    } else {
      throw UsageError("unknown construction '" + o.construction + "'");
    }
    emitted.assign(run.emitted().begin(), run.emitted().end());
    steps.assign(run.steps().begin(), run.steps().end());
  }
  if (!o.record.empty()) io.write(o.record, serialize_sequence(make_orientation_sequence(emitted, 2)));
  return emit_trace(io, o, std::move(header), std::move(steps));
}

std::string fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int cmd_oracle(const Io& io, const Options& o, const Given&) {
  const OracleMetric metric = parse_oracle_metric(o.metric);
  const SequenceFile seq = read_sequence(
      io, o, metric == OracleMetric::min_max_load ? SequenceKind::bmatching : SequenceKind::orientation);
  OracleReport report;
  switch (metric) {
    case OracleMetric::min_max_indegree: {
      IndegreeMode mode = IndegreeMode::automatic;
      if (o.mode == "exhaustive") mode = IndegreeMode::exhaustive;
      else if (o.mode == "flow") mode = IndegreeMode::flow;
      else if (!o.mode.empty() && o.mode != "auto") throw UsageError("--mode must be auto, exhaustive or flow");
      report = min_max_indegree(seq.edges, mode);
      break;
    }
    case OracleMetric::min_max_load:
      if (o.mode == "exhaustive") report = min_max_load_exhaustive(seq.arrivals);
      else if (o.mode.empty() || o.mode == "flow" || o.mode == "auto") report = min_max_load(seq.arrivals);
      else throw UsageError("--mode must be auto, exhaustive or flow");
      break;
    case OracleMetric::arboricity:
      report = arboricity(seq.edges);
      break;
  }
  report.instance_id = fnv1a(serialize_sequence(seq));
  nlohmann::ordered_json j;
  j["instance_id"] = report.instance_id;
  j["metric"] = to_string(report.metric);
  j["value"] = report.value.str();
  j["ceil"] = report.value.ceil();
  if (report.witness) j["witness"] = *report.witness;
  io.write(o.output, j.dump() + "\n");
  if (!o.witness.empty() && report.witness) {
    io.write(o.witness, serialize_witness(WitnessFile{seq.kind, *report.witness}));
  }
  return kOk;
}

int cmd_verify(const Io& io, const Options& o, const Given&, std::ostream& err) {
  const Trace trace = parse_trace(io.read(o.input));
  const TraceCheck check = verify_trace(trace);
  for (const std::string& p : check.problems) err << "verify: " << p << "\n";
  io.write(o.output, check.ok ? "ok\n" : "fail\n");
  return check.ok ? kOk : kBoundViolated;
}

int cmd_gen(const Io& io, const Options& o, const Given& g) {
  if (!g.has("--n")) throw UsageError("gen needs --n");
  SequenceFile seq;
  WitnessFile witness;
  if (o.kind == "forest") {
    if (g.has("--K") || g.has("--C")) throw UsageError("forest takes no --K/--C");
    seq = make_orientation_sequence(random_forest(o.n, o.seed), g.has("--c") ? o.c : 2);
    witness = WitnessFile{SequenceKind::orientation, root_away_orientation(seq.edges)};
  } else if (o.kind == "arboricity-bounded") {
    if (g.has("--K") || g.has("--C")) throw UsageError("arboricity-bounded takes no --K/--C");
    if (o.n < 2) throw UsageError("arboricity-bounded needs --n >= 2 nodes");
    const std::uint32_t c = g.has("--c") ? o.c : 2;
    if (c < 1) throw UsageError("--c must be at least 1");
    ArboricityInstance inst = arboricity_bounded(o.n, c, o.seed);
    seq = make_orientation_sequence(std::move(inst.edges), c);
    seq.set_param("delta", c);
    seq.set_param("Delta", 2 * c);
    witness = WitnessFile{SequenceKind::orientation, std::move(inst.witness_heads)};
  } else if (o.kind == "bmatch-feasible") {
    if (g.has("--c") || g.has("--delta") || g.has("--Delta")) throw UsageError("bmatch-feasible takes no --c/--delta/--Delta");
    if (o.K < 1 || o.C < 2) throw UsageError("--K must be at least 1 and --C at least 2");
    BMatchInstance inst = bmatch_feasible(o.n, o.K, o.seed);
    seq = make_bmatching_sequence(std::move(inst.arrivals), o.K, o.C);
    witness = WitnessFile{SequenceKind::bmatching, std::move(inst.witness)};
  } else {
    throw UsageError("--kind must be forest, arboricity-bounded or bmatch-feasible");
  }
  io.write(o.output, serialize_sequence(seq));
  if (!o.witness.empty()) io.write(o.witness, serialize_witness(witness));
  return kOk;
}

int cmd_export_dot(const Io& io, const Options& o, const Given& g) {
  const SequenceFile seq = parse_sequence(io.read(o.input));
  const std::size_t limit = g.has("--steps") ? o.steps : seq.size();
  if (seq.kind == SequenceKind::bmatching) {
    OnlineBMatcher matcher(bmatch_config(o, g, seq));
    for (std::size_t i = 0; i < std::min(limit, seq.arrivals.size()); ++i) {
      try {
        matcher.process_arrival(seq.arrivals[i]);
      } catch (const Error& e) {
        throw e.at_step(i);
      }
    }
    io.write(o.output, export_dot(matcher));
    return kOk;
  }
  std::unique_ptr<AlgorithmDriver> driver;
  if (o.algorithm == "orient-sp") {
    const std::uint32_t c = g.has("--c") ? o.c : header_u32(seq, "c", 2);
    if (c < 2) throw UsageError("--c must be at least 2");
    driver = make_sp(o, c);
  } else if (o.algorithm == "greedy") {
    driver = std::make_unique<GreedyOrienter>();
  } else if (o.algorithm == "orient-allflip") {
    driver = std::make_unique<AllFlipOrienter>(allflip_config(o, g, &seq));
  } else {
    throw UsageError("--algorithm must be orient-sp, greedy or orient-allflip");
  }
  replay(*driver, seq.edges, limit);
  io.write(o.output, export_dot(driver->view()));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Online edge orientation and b-matching with recourse", "recourse"};
  app.require_subcommand(1);
  Options o;
  Given given;

  auto io_flags = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "Input file ('-' for stdin)");
    sub->add_option("--output,-o", o.output, "Output file ('-' for stdout)");
  };
  auto seed_flag = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed (env " + std::string(kSeedEnv) + ")")->envname(kSeedEnv);
  };
  auto opt = [&](CLI::App* sub, const std::string& name, auto& target, const std::string& help) {
    CLI::Option* option = sub->add_option(name, target, help);
    given.opts.emplace(name, option);
    return option;
  };

  CLI::App* sp = app.add_subcommand("orient-sp", "Shortest-path orientation of an acyclic sequence");
  io_flags(sp);
  seed_flag(sp);
  opt(sp, "--c", o.c, "In-degree constraint (default: header)");
  sp->add_option("--policy", o.policy, "Tie policy: first, second, random");
  sp->add_flag("--fixing", o.fixing, "Use the variant with free fixing flips");

  CLI::App* af = app.add_subcommand("orient-allflip", "All-flip orientation under an arboricity promise");
  io_flags(af);
  seed_flag(af);
  opt(af, "--delta", o.delta, "Promised orientation bound");
  opt(af, "--Delta", o.Delta, "Maintained in-degree bound (>= 2 delta)");
  af->add_option("--policy", o.policy, "Initial orientation policy: first, second, random");

  CLI::App* gr = app.add_subcommand("greedy", "No-recourse greedy orientation");
  io_flags(gr);

  CLI::App* bm = app.add_subcommand("bmatch", "Online b-matching by shortest augmenting paths");
  io_flags(bm);
  seed_flag(bm);
  opt(bm, "--K", o.K, "Promised offline load (default: header)");
  opt(bm, "--C", o.C, "Relaxation factor (default: header)");
  bm->add_option("--policy", o.policy, "Pick policy: lowest_load_then_id, first_listed, random");

  CLI::App* adv = app.add_subcommand("adversary", "Run an adaptive construction against an algorithm");
  adv->add_option("--output,-o", o.output, "Trace output ('-' for stdout)");
  seed_flag(adv);
  adv->add_option("--construction", o.construction, "tm, single-step, linear, single-edge, two-flip, pairing")
      ->required();
  opt(adv, "--param", o.param, "Construction size parameter");
  adv->add_option("--policy", o.policy, "Tie policy of the attacked algorithm");
  adv->add_option("--mode", o.mode, "single-edge mode: robust (default) or paper");
  adv->add_flag("--fixing", o.fixing, "Attack the fixing variant");
  adv->add_option("--record", o.record, "Write the emitted edges as a sequence file");

  CLI::App* orc = app.add_subcommand("oracle", "Offline optimum of an instance");
  io_flags(orc);
  orc->add_option("--metric", o.metric, "min_max_indegree, min_max_load, arboricity")->required();
  orc->add_option("--mode", o.mode, "auto, exhaustive or flow");
  orc->add_option("--witness", o.witness, "Write an optimal witness file");

  CLI::App* ver = app.add_subcommand("verify", "Recheck a trace's consistency and bounds");
  io_flags(ver);

  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--output,-o", o.output, "Output file ('-' for stdout)");
  seed_flag(gen);
  gen->add_option("--kind", o.kind, "forest, arboricity-bounded, bmatch-feasible")->required();
  opt(gen, "--n", o.n, "Edges (forest), nodes (arboricity-bounded) or arrivals (bmatch-feasible)");
  opt(gen, "--c", o.c, "Arboricity bound");
  opt(gen, "--delta", o.delta, "Not accepted; listed to reject contradictions");
  opt(gen, "--Delta", o.Delta, "Not accepted; listed to reject contradictions");
  opt(gen, "--K", o.K, "Hidden assignment load");
  opt(gen, "--C", o.C, "Relaxation written to the header");
  gen->add_option("--witness", o.witness, "Write the hidden witness file");

  CLI::App* dot = app.add_subcommand("export-dot", "Replay a sequence and print the final state as DOT");
  io_flags(dot);
  seed_flag(dot);
  dot->add_option("--algorithm", o.algorithm, "orient-sp, greedy, orient-allflip (orientation input)");
  opt(dot, "--steps", o.steps, "Stop after this many events");
  opt(dot, "--c", o.c, "In-degree constraint");
  opt(dot, "--delta", o.delta, "All-flip promise");
  opt(dot, "--Delta", o.Delta, "All-flip bound");
  opt(dot, "--K", o.K, "b-matching K");
  opt(dot, "--C", o.C, "b-matching C");
  dot->add_option("--policy", o.policy, "Tie or pick policy");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  const Given& active_given = given;  // only the active subcommand's options can be set

  const Io io(in, out);
  try {
    const std::string name = active->get_name();
    if (name == "orient-sp") return cmd_orient_sp(io, o, active_given);
    if (name == "orient-allflip") return cmd_allflip(io, o, active_given);
    if (name == "greedy") return cmd_greedy(io, o, active_given);
    if (name == "bmatch") return cmd_bmatch(io, o, active_given);
    if (name == "adversary") return cmd_adversary(io, o, active_given);
    if (name == "oracle") return cmd_oracle(io, o, active_given);
    if (name == "verify") return cmd_verify(io, o, active_given, err);
    if (name == "gen") return cmd_gen(io, o, active_given);
    if (name == "export-dot") return cmd_export_dot(io, o, active_given);
    err << "usage: unknown subcommand\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.kind());
  }
}

}  // namespace recourse::cli
