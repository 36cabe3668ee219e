#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "demo.hpp"
#include "hypersim/abhi.hpp"
#include "hypersim/agent.hpp"
#include "hypersim/builtins.hpp"
#include "hypersim/classifier.hpp"
#include "hypersim/dsl.hpp"
#include "hypersim/error.hpp"
#include "hypersim/world.hpp"

namespace hypersim::cli {
namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultBoundedBudget = 1'000'000;
constexpr std::size_t kMaxCliHorizon = 64;
constexpr const char* kBuiltinPrefix = "builtin:";

struct CommonOptions {
  std::string format = "json";
  std::string output;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", opts.output, "Write results to this file instead of stdout");
}

void emit(const CommonOptions& opts, std::ostream& out, const std::string& text) {
  if (opts.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.output, std::ios::binary);
  if (!file) throw Error("cannot write '" + opts.output + "'");
  file << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string decimal(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

NamedMachine load_machine(const std::string& ref) {
  if (ref.rfind(kBuiltinPrefix, 0) == 0) {
    std::string name = ref.substr(std::string_view(kBuiltinPrefix).size());
    return {name, builtin(name)};
  }
  return {std::filesystem::path(ref).stem().string(), load_machine_file(ref)};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t next = text.find(sep, pos);
    out.push_back(text.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HYPERSIM_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string_view(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(std::string("HYPERSIM_SEED is not an unsigned integer: '") + env + "'");
  }
  throw Error("a seed is required: pass --seed or set HYPERSIM_SEED");
}

// --- run -------------------------------------------------------------------

struct RunOptions {
  CommonOptions common;
  std::string machine;
  std::optional<std::size_t> bounded;
  bool unbounded = false;
  std::optional<std::uint64_t> budget;
  std::string input;
};

int cmd_run(const RunOptions& o, std::ostream& out) {
  NamedMachine m = load_machine(o.machine);
  if (!o.bounded && !o.unbounded) throw Error("choose a tape: --bounded M or --unbounded");
  if (o.unbounded && !o.budget) throw Error("--budget is required for unbounded runs");
  const TapeKind kind = o.bounded ? TapeKind::bounded(*o.bounded) : TapeKind::unbounded();
  const std::uint64_t budget = o.budget.value_or(kDefaultBoundedBudget);

  std::vector<SymbolId> input;
  for (const auto& name : split(o.input, ',')) input.push_back(m.spec.symbol_id(name));

  const RunResult r = run(m.spec, kind, budget, input);
  const auto& cfg = r.final;
  auto tape = tape_symbols(m.spec, cfg.tape, 0, cfg.tape.extent());

  std::string text;
  if (o.common.format == "csv") {
    std::string joined;
    for (const auto& s : tape) joined += (joined.empty() ? "" : " ") + s;
    text = "outcome,steps,state,head,visited_extent,tape\n" + std::string(to_string(r.outcome)) +
           ',' + std::to_string(r.steps) + ',' + m.spec.states()[cfg.state] + ',' +
           std::to_string(cfg.head) + ',' + std::to_string(cfg.visited_extent) + ',' + joined +
           '\n';
  } else {
    json doc = {{"machine", m.id},
                {"tape_kind", kind.is_bounded() ? "bounded" : "unbounded"},
                {"outcome", to_string(r.outcome)},
                {"steps", r.steps},
                {"state", m.spec.states()[cfg.state]},
                {"head", cfg.head},
                {"visited_extent", cfg.visited_extent},
                {"tape", tape}};
    if (kind.is_bounded()) doc["memory"] = kind.cells();
    text = doc.dump(2) + '\n';
  }
  emit(o.common, out, text);
  switch (r.outcome) {
    case RunOutcome::Halted: return kOk;
    case RunOutcome::BudgetExhausted: return kBudgetExhausted;
    case RunOutcome::MemoryFull: return kMemoryFull;
  }
  return kError;
}

// --- classify --------------------------------------------------------------

struct ClassifyOptions {
  CommonOptions common;
  std::vector<std::string> machines;
  std::size_t memory = 64;
  std::uint64_t budget = kDefaultBoundedBudget;
  unsigned threads = 1;
};

int cmd_classify(const ClassifyOptions& o, std::ostream& out) {
  std::vector<NamedMachine> machines;
  for (const auto& ref : o.machines) machines.push_back(load_machine(ref));
  const PartitionReport report = partition_report(machines, o.memory, o.budget, o.threads);
  emit(o.common, out, o.common.format == "csv" ? report.to_csv() : report.to_json() + '\n');
  return kOk;
}

// --- measure / predict -----------------------------------------------------

struct MeasureOptions {
  CommonOptions common;
  std::optional<std::size_t> bounded;
  bool unbounded = false;
  std::uint64_t budget = kDefaultBoundedBudget;
};

int cmd_measure(const MeasureOptions& o, std::ostream& out) {
  if (!o.bounded && !o.unbounded) throw Error("choose a tape: --bounded M or --unbounded");
  const TapeKind kind = o.bounded ? TapeKind::bounded(*o.bounded) : TapeKind::unbounded();
  const MemoryReport report = measure_memory(kind, o.budget);
  std::string text;
  if (const auto* m = std::get_if<memory_report::Measured>(&report)) {
    text = o.common.format == "csv"
               ? "outcome,cells,steps\nMeasured," + std::to_string(m->cells) + ',' +
                     std::to_string(m->steps) + '\n'
               : json{{"outcome", "Measured"}, {"cells", m->cells}, {"steps", m->steps}}.dump(2) +
                     '\n';
  } else {
    text = o.common.format == "csv"
               ? "outcome,budget\nNoAnswer," + std::to_string(o.budget) + '\n'
               : json{{"outcome", "NoAnswer"}, {"budget", o.budget}}.dump(2) + '\n';
  }
  emit(o.common, out, text);
  return kOk;
}

struct PredictOptions {
  CommonOptions common;
  std::uint64_t k = 0;
  std::uint64_t n = 1;
};

int cmd_predict(const PredictOptions& o, std::ostream& out) {
  const Rational p = prediction_probability(o.k, o.n);
  emit(o.common, out,
       o.common.format == "csv"
           ? "k,n,probability,decimal\n" + std::to_string(o.k) + ',' + std::to_string(o.n) + ',' +
                 to_string(p) + ',' + decimal(to_double(p)) + '\n'
           : json{{"k", o.k}, {"n", o.n}, {"probability", to_string(p)},
                  {"decimal", to_double(p)}}.dump(2) + '\n');
  return kOk;
}

// --- abhi ------------------------------------------------------------------

struct TapeOptions {
  std::string times;
  std::string interval;
  std::optional<std::size_t> count;
};

void add_tape_options(CLI::App* cmd, TapeOptions& t) {
  auto* times = cmd->add_option("--times", t.times, "Measurement times, e.g. 1/2,1,3/2");
  auto* interval =
      cmd->add_option("--interval", t.interval, "Uniform spacing between measurement times");
  auto* count = cmd->add_option("--count", t.count, "Number of uniformly spaced measurements");
  times->excludes(interval);
  times->excludes(count);
  interval->needs(count);
  count->needs(interval);
}

MeasurementTape build_tape(const TapeOptions& t) {
  if (!t.interval.empty()) return MeasurementTape::uniform(parse_rational(t.interval), *t.count);
  return MeasurementTape::parse(t.times);
}

struct AbhiOptions {
  CommonOptions common;
  std::string hamiltonian;
  TapeOptions tape;
  std::optional<std::size_t> shots;
  std::optional<std::uint64_t> seed;
  bool exact = false;
  unsigned threads = 1;
};

int cmd_abhi(const AbhiOptions& o, std::ostream& out) {
  const AbhiSetup setup = parse_abhi_setup(read_file(o.hamiltonian));
  const MeasurementTape tape = build_tape(o.tape);

  if (o.exact) {
    const auto probs = exact_distribution(setup.hamiltonian, setup.psi0, tape);
    std::string text;
    if (o.common.format == "csv") {
      text = "bitstring,probability\n";
      for (std::size_t i = 0; i < probs.size(); ++i) {
        text += bitstring(i, tape.size()) + ',' + decimal(probs[i]) + '\n';
      }
    } else {
      json rows = json::array();
      for (std::size_t i = 0; i < probs.size(); ++i) {
        rows.push_back({{"bitstring", bitstring(i, tape.size())}, {"probability", probs[i]}});
      }
      text = json{{"tape_length", tape.size()}, {"distribution", rows}}.dump(2) + '\n';
    }
    emit(o.common, out, text);
    return kOk;
  }

  if (!o.shots) throw Error("choose --exact or --shots S");
  const std::uint64_t seed = resolve_seed(o.seed);
  const auto tapes = sample_shots(setup.hamiltonian, setup.psi0, tape, *o.shots, seed, o.threads);
  std::string text;
  if (o.common.format == "csv") {
    text = "shot,bits\n";
    for (std::size_t i = 0; i < tapes.size(); ++i) {
      text += std::to_string(i) + ',' + tapes[i].str() + '\n';
    }
  } else {
    json rows = json::array();
    for (std::size_t i = 0; i < tapes.size(); ++i) {
      rows.push_back({{"shot", i}, {"bits", tapes[i].str()}});
    }
    text = json{{"tape_length", tape.size()}, {"seed", seed}, {"shots", rows}}.dump(2) + '\n';
  }
  emit(o.common, out, text);
  return kOk;
}

// --- agent -----------------------------------------------------------------

struct AgentOptions {
  CommonOptions common;
  std::string file;
  std::string hamiltonian;
  TapeOptions tape;
  std::size_t horizon = 16;
  std::size_t shots = 1;
  std::optional<std::uint64_t> seed;
  std::string x0 = "0";
  std::string alpha = "1";
  unsigned threads = 1;
};

std::string read_action_line(const std::string& path) {
  std::string text = read_file(path);
  auto eol = text.find('\n');
  if (eol != std::string::npos) text.resize(eol);
  return text;
}

int cmd_agent(const AgentOptions& o, std::ostream& out) {
  if (o.file.empty() == o.hamiltonian.empty()) {
    throw Error("choose exactly one source: --file or --hamiltonian");
  }
  if (o.horizon > kMaxCliHorizon) {
    throw Error("horizon K is capped at " + std::to_string(kMaxCliHorizon));
  }
  const Rational x0 = parse_rational(o.x0);
  const Rational alpha = parse_rational(o.alpha);

  std::optional<ActionSequence> file_actions;
  ActionSource source = FileSource{};
  std::optional<std::uint64_t> seed;
  if (!o.file.empty()) {
    file_actions = ActionSequence::parse(read_action_line(o.file));
    source = FileSource{*file_actions};
  } else {
    seed = resolve_seed(o.seed);
    source = AbhiSource{parse_abhi_setup(read_file(o.hamiltonian)), build_tape(o.tape), *seed,
                        o.threads};
  }
  const auto states = reachability_experiment(source, o.horizon, o.shots, x0, alpha);

  std::string text;
  if (o.common.format == "csv") {
    text = "shot,numerator,denominator,decimal\n";
    for (std::size_t i = 0; i < states.size(); ++i) {
      text += std::to_string(i) + ',' + boost::multiprecision::numerator(states[i]).str() + ',' +
              boost::multiprecision::denominator(states[i]).str() + ',' +
              decimal(to_double(states[i])) + '\n';
    }
  } else {
    json rows = json::array();
    Rational sum(0);
    for (std::size_t i = 0; i < states.size(); ++i) {
      sum += states[i];
      rows.push_back({{"shot", i},
                      {"numerator", boost::multiprecision::numerator(states[i]).str()},
                      {"denominator", boost::multiprecision::denominator(states[i]).str()},
                      {"decimal", to_double(states[i])}});
    }
    json doc = {{"source", o.file.empty() ? "abhi" : "file"},
                {"horizon", o.horizon},
                {"states", rows}};
    if (!states.empty()) doc["mean"] = to_double(sum / states.size());
    if (seed) doc["seed"] = *seed;
    if (file_actions && file_actions->is_periodic()) {
      doc["limit_state"] = to_string(limit_state(*file_actions, x0, alpha));
    }
    text = doc.dump(2) + '\n';
  }
  emit(o.common, out, text);
  return kOk;
}

// --- encode / decode -------------------------------------------------------

struct EncodeOptions {
  CommonOptions common;
  std::string params;
};

int cmd_encode(const EncodeOptions& o, std::ostream& out) {
  std::vector<Parameter> params;
  for (const auto& p : split(o.params, ',')) {
    const BigInt value = parse_natural(p);
    if (value > std::numeric_limits<Parameter>::max()) {
      throw DomainError("parameter '" + p + "' is out of range");
    }
    params.push_back(value.convert_to<Parameter>());
  }
  const BigInt n = godel_encode(params);
  emit(o.common, out,
       o.common.format == "csv" ? n.str() + '\n'
                                : json{{"params", params}, {"godel", n.str()}}.dump(2) + '\n');
  return kOk;
}

struct DecodeOptions {
  CommonOptions common;
  std::string number;
};

int cmd_decode(const DecodeOptions& o, std::ostream& out) {
  const BigInt n = parse_natural(o.number);
  const auto params = godel_decode(n);
  std::string joined;
  for (std::size_t i = 0; i < params.size(); ++i) {
    joined += (i ? "," : "") + std::to_string(params[i]);
  }
  emit(o.common, out,
       o.common.format == "csv" ? joined + '\n'
                                : json{{"godel", n.str()}, {"params", params}}.dump(2) + '\n');
  return kOk;
}

// --- env / task ------------------------------------------------------------

struct EnvOptions {
  CommonOptions common;
  std::string path;
};

int cmd_env(const EnvOptions& o, std::ostream& out) {
  const EnvironmentDocument doc = parse_environment(read_file(o.path));
  if (!doc.bounds) throw Error("environment document has no 'bounds'");
  const auto violations = validate_environment(doc.environment, *doc.bounds);

  std::string text;
  if (o.common.format == "csv") {
    text = "field,message\n";
    for (const auto& v : violations) text += v.field + ',' + v.message + '\n';
  } else {
    json vs = json::array();
    for (const auto& v : violations) vs.push_back({{"field", v.field}, {"message", v.message}});
    json objects = json::array();
    for (const auto& obj : doc.environment.objects) {
      json entry = {{"params", obj.params}};
      try {
        entry["godel"] = godel_encode(obj.params).str();
      } catch (const DomainError&) {
        entry["godel"] = nullptr;
      }
      objects.push_back(entry);
    }
    text = json{{"valid", violations.empty()}, {"violations", vs}, {"objects", objects}}.dump(2) +
           '\n';
  }
  emit(o.common, out, text);
  return violations.empty() ? kOk : kViolations;
}

struct TaskOptions {
  CommonOptions common;
  std::vector<std::string> paths;
};

int cmd_task(const TaskOptions& o, std::ostream& out) {
  Trajectory traj = parse_trajectory(read_file(o.paths.at(0)));
  for (std::size_t i = 1; i < o.paths.size(); ++i) {
    traj = cascade(traj, parse_trajectory(read_file(o.paths[i])));
  }
  const bool task = is_task(traj);
  std::string text;
  if (o.common.format == "csv") {
    text = "is_task,snapshots\n" + std::string(task ? "true" : "false") + ',' +
           std::to_string(traj.snapshots().size()) + '\n';
  } else {
    json doc = {{"is_task", task},
                {"snapshots", traj.snapshots().size()},
                {"trajectory", json::parse(trajectory_to_json(traj))}};
    text = doc.dump(2) + '\n';
  }
  emit(o.common, out, text);
  return kOk;
}

// --- builtin / demo --------------------------------------------------------

struct BuiltinOptions {
  CommonOptions common;
  std::string name;
};

int cmd_builtin(const BuiltinOptions& o, std::ostream& out) {
  emit(o.common, out, serialize(builtin(o.name)));
  return kOk;
}

struct DemoOptions {
  CommonOptions common;
  std::optional<std::uint64_t> seed;
  std::size_t shots = 100'000;
  unsigned threads = 1;
};

int cmd_demo(const DemoOptions& o, std::ostream& out) {
  const DemoReport report = run_demo(resolve_seed(o.seed), o.shots, o.threads);
  emit(o.common, out, o.common.format == "csv" ? report.to_csv() : report.to_json() + '\n');
  return report.all_passed() ? kOk : kError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded/unbounded machine, Abhi machine and agent-dynamics experiments",
               "hypersim"};
  app.require_subcommand(1);

  RunOptions run_o;
  auto* run_cmd = app.add_subcommand("run", "Run a machine until it halts, fills memory, or "
                                            "exhausts its budget (exit 0/3/2)");
  run_cmd->add_option("machine", run_o.machine, "Path to a .tm file or builtin:NAME")->required();
  auto* bounded = run_cmd->add_option("--bounded", run_o.bounded, "Finite tape of M cells");
  auto* unbounded = run_cmd->add_flag("--unbounded", run_o.unbounded, "One-way infinite tape");
  bounded->excludes(unbounded);
  run_cmd->add_option("--budget", run_o.budget, "Maximum number of transitions");
  run_cmd->add_option("--input", run_o.input, "Comma-separated symbols preloaded at cell 0");
  add_common(run_cmd, run_o.common);

  ClassifyOptions cls_o;
  auto* cls_cmd = app.add_subcommand("classify", "Classify machines into P1/P2/P3/Unknown");
  cls_cmd->add_option("machines", cls_o.machines, "Paths to .tm files or builtin:NAME");
  cls_cmd->add_option("-M,--memory", cls_o.memory, "Probe tape size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cls_cmd->add_option("--budget", cls_o.budget, "Maximum steps per machine")->capture_default_str();
  cls_cmd->add_option("--threads", cls_o.threads, "Worker threads")->capture_default_str();
  add_common(cls_cmd, cls_o.common);

  MeasureOptions mem_o;
  auto* mem_cmd = app.add_subcommand("measure", "Measure tape memory with the scan-and-mark machine");
  auto* mem_bounded = mem_cmd->add_option("--bounded", mem_o.bounded, "Finite tape of M cells");
  auto* mem_unbounded = mem_cmd->add_flag("--unbounded", mem_o.unbounded, "One-way infinite tape");
  mem_bounded->excludes(mem_unbounded);
  mem_cmd->add_option("--budget", mem_o.budget, "Maximum steps")->capture_default_str();
  add_common(mem_cmd, mem_o.common);

  PredictOptions pred_o;
  auto* pred_cmd = app.add_subcommand("predict", "Probability (N-k)/N that a uniform draw exceeds k");
  pred_cmd->add_option("-k", pred_o.k, "Threshold")->required();
  pred_cmd->add_option("-n,--size", pred_o.n, "Set size")->required();
  add_common(pred_cmd, pred_o.common);

  AbhiOptions abhi_o;
  auto* abhi_cmd = app.add_subcommand("abhi", "Sample or enumerate Abhi machine output tapes");
  abhi_cmd->add_option("hamiltonian", abhi_o.hamiltonian, "Hamiltonian JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  add_tape_options(abhi_cmd, abhi_o.tape);
  auto* shots = abhi_cmd->add_option("--shots", abhi_o.shots, "Number of sampled runs");
  auto* exact = abhi_cmd->add_flag("--exact", abhi_o.exact, "Print the exact distribution");
  shots->excludes(exact);
  abhi_cmd->add_option("--seed", abhi_o.seed, "Seed (falls back to HYPERSIM_SEED)");
  abhi_cmd->add_option("--threads", abhi_o.threads, "Worker threads")->capture_default_str();
  add_common(abhi_cmd, abhi_o.common);

  AgentOptions agent_o;
  auto* agent_cmd = app.add_subcommand("agent", "Terminal states of the halving-interval agent");
  auto* file = agent_cmd->add_option("--file", agent_o.file, "Action file: one line of 0/1");
  auto* ham = agent_cmd->add_option("--hamiltonian", agent_o.hamiltonian,
                                    "Sample actions from an Abhi machine");
  file->excludes(ham);
  add_tape_options(agent_cmd, agent_o.tape);
  agent_cmd->add_option("-K,--horizon", agent_o.horizon, "Number of actions")->capture_default_str();
  agent_cmd->add_option("--shots", agent_o.shots, "Abhi-sourced runs")->capture_default_str();
  agent_cmd->add_option("--seed", agent_o.seed, "Seed (falls back to HYPERSIM_SEED)");
  agent_cmd->add_option("--x0", agent_o.x0, "Initial state")->capture_default_str();
  agent_cmd->add_option("--alpha", agent_o.alpha, "Velocity gain")->capture_default_str();
  agent_cmd->add_option("--threads", agent_o.threads, "Worker threads")->capture_default_str();
  add_common(agent_cmd, agent_o.common);

  EncodeOptions enc_o;
  auto* enc_cmd = app.add_subcommand("encode", "Goedel-encode a parameter list");
  enc_cmd->add_option("params", enc_o.params, "Comma-separated parameters >= 1")->required();
  add_common(enc_cmd, enc_o.common);

  DecodeOptions dec_o;
  auto* dec_cmd = app.add_subcommand("decode", "Decode a Goedel number into parameters");
  dec_cmd->add_option("number", dec_o.number, "Decimal natural number")->required();
  add_common(dec_cmd, dec_o.common);

  EnvOptions env_o;
  auto* env_cmd = app.add_subcommand("env", "Validate an environment document (exit 2 on violations)");
  env_cmd->add_option("path", env_o.path, "Environment JSON")->required();
  add_common(env_cmd, env_o.common);

  TaskOptions task_o;
  auto* task_cmd = app.add_subcommand("task", "Cascade trajectories and test the task predicate");
  task_cmd->add_option("paths", task_o.paths, "Trajectory JSON files, cascaded in order")
      ->required();
  add_common(task_cmd, task_o.common);

  BuiltinOptions bi_o;
  auto* bi_cmd = app.add_subcommand("builtin", "Print a builtin machine as .tm source");
  bi_cmd->add_option("name", bi_o.name, "alg1, alg2, bouncer or empty")->required();
  add_common(bi_cmd, bi_o.common);

  DemoOptions demo_o;
  auto* demo_cmd = app.add_subcommand("demo", "Run every experiment and write a summary report");
  demo_cmd->add_option("--seed", demo_o.seed, "Seed (falls back to HYPERSIM_SEED)");
  demo_cmd->add_option("--shots", demo_o.shots, "Abhi shots")->capture_default_str();
  demo_cmd->add_option("--threads", demo_o.threads, "Worker threads")->capture_default_str();
  add_common(demo_cmd, demo_o.common);

  std::vector<const char*> argv{"hypersim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*run_cmd) return cmd_run(run_o, out);
    if (*cls_cmd) return cmd_classify(cls_o, out);
    if (*mem_cmd) return cmd_measure(mem_o, out);
    if (*pred_cmd) return cmd_predict(pred_o, out);
    if (*abhi_cmd) return cmd_abhi(abhi_o, out);
    if (*agent_cmd) return cmd_agent(agent_o, out);
    if (*enc_cmd) return cmd_encode(enc_o, out);
    if (*dec_cmd) return cmd_decode(dec_o, out);
    if (*env_cmd) return cmd_env(env_o, out);
    if (*task_cmd) return cmd_task(task_o, out);
    if (*bi_cmd) return cmd_builtin(bi_o, out);
    if (*demo_cmd) return cmd_demo(demo_o, out);
  } catch (const ParseError& e) {
    err << "ParseError: " << e.what() << '\n';
    return kError;
  } catch (const NotAnEncoding& e) {
    err << "NotAnEncoding: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace hypersim::cli
