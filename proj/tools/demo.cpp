#include "demo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hypersim/abhi.hpp"
#include "hypersim/agent.hpp"
#include "hypersim/builtins.hpp"
#include "hypersim/classifier.hpp"
#include "hypersim/error.hpp"
#include "hypersim/stats.hpp"
#include "hypersim/world.hpp"

namespace hypersim::cli {
namespace {

using nlohmann::json;

DemoCheck memory_on_bounded_tapes() {
  json rows = json::array();
  bool ok = true;
  std::vector<std::pair<std::size_t, std::uint64_t>> points;
  for (std::size_t m : {8u, 64u, 512u}) {
    auto report = measure_memory(TapeKind::bounded(m), 1'000'000);
    const auto* measured = std::get_if<memory_report::Measured>(&report);
    ok = ok && measured && measured->cells == m;
    rows.push_back({{"memory", m},
                    {"measured", measured ? json(measured->cells) : json(nullptr)},
                    {"steps", measured ? json(measured->steps) : json(nullptr)}});
    if (measured) points.emplace_back(m, measured->steps);
  }
  // Fit steps = c*M + d from the first two points, check the third exactly.
  bool affine = false;
  if (points.size() == 3) {
    const auto [m0, s0] = points[0];
    const auto [m1, s1] = points[1];
    const auto [m2, s2] = points[2];
    const auto dm = static_cast<std::int64_t>(m1 - m0);
    const auto ds = static_cast<std::int64_t>(s1) - static_cast<std::int64_t>(s0);
    if (ds % dm == 0) {
      const std::int64_t c = ds / dm;
      const std::int64_t d = static_cast<std::int64_t>(s0) - c * static_cast<std::int64_t>(m0);
      affine = c * static_cast<std::int64_t>(m2) + d == static_cast<std::int64_t>(s2);
    }
  }
  ok = ok && affine;
  return {"memory_measured_on_bounded_tapes", ok,
          ok ? "Measured(M) for M in {8,64,512}, steps affine in M" : "measurement mismatch",
          {{"rows", rows}, {"steps_affine_in_memory", affine}}};
}

DemoCheck memory_on_unbounded_tape() {
  json rows = json::array();
  bool ok = true;
  for (std::uint64_t budget : {1'000ull, 100'000ull, 10'000'000ull}) {
    auto report = measure_memory(TapeKind::unbounded(), budget);
    const bool no_answer = std::holds_alternative<memory_report::NoAnswer>(report);
    ok = ok && no_answer;
    rows.push_back({{"budget", budget}, {"outcome", no_answer ? "NoAnswer" : "Measured"}});
  }
  return {"memory_unmeasurable_on_unbounded_tape", ok, "NoAnswer for every finite budget",
          {{"rows", rows}}};
}

DemoCheck lookup_table_contradiction() {
  const MachineSpec spec = builtin("alg2");
  const auto input = alg2::query_input(spec);
  const auto unbounded = run(spec, TapeKind::unbounded(), 10'000, input);
  const auto bounded = run(spec, TapeKind::bounded(alg2::footprint()), 10'000, input);
  const std::string a =
      symbols_to_text(spec, unbounded.final.tape, alg2::answer_begin(), alg2::answer_end());
  const std::string b =
      symbols_to_text(spec, bounded.final.tape, alg2::answer_begin(), alg2::answer_end());
  const bool ok = unbounded.outcome == RunOutcome::Halted &&
                  bounded.outcome == RunOutcome::Halted && a == b && a == alg2::kAnswer;
  return {"lookup_table_same_answer_on_both_tapes", ok,
          "both tapes answer '" + a + "'",
          {{"query", alg2::kQuery},
           {"unbounded_answer", a},
           {"bounded_answer", b},
           {"bounded_memory", alg2::footprint()}}};
}

DemoCheck classification_trio() {
  std::vector<NamedMachine> machines;
  for (const char* name : {"empty", "bouncer", "alg1"}) machines.push_back({name, builtin(name)});
  const auto report = partition_report(machines, 16, 1'000'000);
  const bool ok = report.rows.size() == 3 && report.rows[0].result.verdict() == Verdict::P1 &&
                  report.rows[1].result.verdict() == Verdict::P2 &&
                  report.rows[2].result.verdict() == Verdict::P3;
  return {"classification_trio", ok, "empty=P1, bouncer=P2, alg1=P3 at M=16",
          json::parse(report.to_json())};
}

// sigma_x with the measurement interval set to a quarter turn, so every
// measurement is a fair coin.
AbhiSetup fair_coin_setup() { return {Hamiltonian2::sigma_x(), QubitState::zero()}; }
Rational quarter_turn() { return rational_from_double(std::numbers::pi / 4); }

DemoCheck abhi_uniformity(std::uint64_t seed, std::size_t shots, unsigned threads) {
  constexpr std::size_t kBits = 4;
  const AbhiSetup setup = fair_coin_setup();
  const MeasurementTape tape = MeasurementTape::uniform(quarter_turn(), kBits);
  const auto exact = exact_distribution(setup.hamiltonian, setup.psi0, tape);
  const auto samples = sample_shots(setup.hamiltonian, setup.psi0, tape, shots, seed, threads);

  std::vector<std::uint64_t> counts(exact.size(), 0);
  std::vector<std::uint64_t> ones(kBits, 0);
  for (const auto& s : samples) {
    std::size_t index = 0;
    for (std::size_t k = 0; k < kBits; ++k) {
      index = (index << 1) | s.bits[k];
      ones[k] += s.bits[k];
    }
    ++counts[index];
  }
  const double band = 3.0 * std::sqrt(0.25 / static_cast<double>(shots));
  bool ok = true;
  json freqs = json::array();
  for (auto c : ones) {
    const double f = static_cast<double>(c) / static_cast<double>(shots);
    ok = ok && std::abs(f - 0.5) <= band;
    freqs.push_back(f);
  }
  const auto chi = chi_square_test(counts, exact);
  ok = ok && chi.p_value > 0.001;
  std::ostringstream summary;
  summary << "bit frequencies within 0.5 +/- " << band << ", chi-square p = " << chi.p_value;
  return {"abhi_uniform_output_tapes", ok, summary.str(),
          {{"shots", shots},
           {"bit_frequencies", freqs},
           {"chi_square", chi.statistic},
           {"degrees_of_freedom", chi.degrees_of_freedom},
           {"p_value", chi.p_value}}};
}

DemoCheck agent_reachability(std::uint64_t seed, std::size_t shots, unsigned threads) {
  constexpr std::size_t kHorizon = 16;
  const auto file_states = reachability_experiment(
      FileSource{ActionSequence(std::vector<Action>(kHorizon, 1))}, kHorizon, 1);
  const Rational expected_file = Rational(1) - Rational(1, 1 << kHorizon);

  const AbhiSetup setup = fair_coin_setup();
  AbhiSource abhi{setup, MeasurementTape::uniform(quarter_turn(), kHorizon), seed, threads};
  const auto abhi_states = reachability_experiment(abhi, kHorizon, shots);
  Rational sum(0);
  bool in_range = true;
  for (const auto& x : abhi_states) {
    sum += x;
    in_range = in_range && x >= 0 && x <= 1;
  }
  const double mean = shots ? to_double(sum / shots) : 0.0;
  // Uniform over the 2^K dyadic grid: variance (1 - 4^-K) / 12.
  const double variance = (1.0 - std::ldexp(1.0, -2 * static_cast<int>(kHorizon))) / 12.0;
  const double band = std::max(0.01, 3.0 * std::sqrt(variance / static_cast<double>(shots)));
  const bool ok = file_states.size() == 1 && file_states[0] == expected_file && in_range &&
                  std::abs(mean - 0.5) <= band;
  std::ostringstream summary;
  summary << "file all-ones -> " << to_string(file_states[0]) << ", Abhi mean " << mean;
  return {"agent_reachability", ok, summary.str(),
          {{"file_terminal_state", to_string(file_states[0])},
           {"abhi_shots", shots},
           {"abhi_mean", mean},
           {"abhi_in_unit_interval", in_range},
           {"limit_period_10", to_string(limit_state(ActionSequence({}, {1, 0})))}}};
}

DemoCheck godel_numbering() {
  const std::vector<Parameter> params{1, 2};
  const BigInt n = godel_encode(params);
  bool rejects_seven = false;
  try {
    godel_decode(BigInt(7));
  } catch (const NotAnEncoding&) {
    rejects_seven = true;
  }
  const bool ok = n == 18 && godel_decode(n) == params && rejects_seven;
  return {"godel_numbering", ok, "[1,2] <-> 18, 7 rejected",
          {{"encode_1_2", n.str()}, {"decode_7_rejected", rejects_seven}}};
}

}  // namespace

bool DemoReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string DemoReport::to_json() const {
  json doc = {{"seed", seed}, {"all_passed", all_passed()}, {"checks", json::array()}};
  for (const auto& c : checks) {
    doc["checks"].push_back(
        {{"name", c.name}, {"passed", c.passed}, {"summary", c.summary}, {"details", c.details}});
  }
  return doc.dump(2);
}

std::string DemoReport::to_csv() const {
  std::string out = "check,passed,summary\n";
  for (const auto& c : checks) {
    std::string summary = c.summary;
    for (auto& ch : summary) {
      if (ch == ',') ch = ';';
    }
    out += c.name + ',' + (c.passed ? "true" : "false") + ',' + summary + '\n';
  }
  return out;
}

DemoReport run_demo(std::uint64_t seed, std::size_t shots, unsigned threads) {
  if (shots == 0) throw DomainError("demo needs at least one shot");
  DemoReport report;
  report.seed = seed;
  report.checks.push_back(memory_on_bounded_tapes());
  report.checks.push_back(memory_on_unbounded_tape());
  report.checks.push_back(lookup_table_contradiction());
  report.checks.push_back(classification_trio());
  report.checks.push_back(abhi_uniformity(seed, shots, threads));
  report.checks.push_back(agent_reachability(seed, shots, threads));
  report.checks.push_back(godel_numbering());
  return report;
}

}  // namespace hypersim::cli
