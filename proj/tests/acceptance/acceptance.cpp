// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypersim/abhi.hpp"
#include "hypersim/agent.hpp"
#include "hypersim/builtins.hpp"
#include "hypersim/classifier.hpp"
#include "hypersim/dsl.hpp"
#include "hypersim/error.hpp"
#include "hypersim/stats.hpp"
#include "hypersim/world.hpp"

namespace {

using namespace hypersim;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

// --- 1 ---------------------------------------------------------------------

void classification_trio(Check& c) {
  for (std::size_t m : {4u, 16u, 64u}) {
    const std::string at = " at M=" + std::to_string(m);
    HaltClass e = classify(builtin("empty"), m, 1'000'000);
    c.expect(e.evidence == Evidence(evidence::Halted{0}), "empty not Halted(0)" + at);
    // bouncer: a on blank -> b at cell 1, back to a at cell 0 after 2 steps
    HaltClass b = classify(builtin("bouncer"), m, 1'000'000);
    c.expect(b.evidence == Evidence(evidence::CycleFound{0, 2}), "bouncer not Cycle(0,2)" + at);
    // alg1 writes one cell per step and overflows on step M
    HaltClass a = classify(builtin("alg1"), m, 1'000'000);
    c.expect(a.evidence == Evidence(evidence::MemoryExhausted{m, m}),
             "alg1 not MemoryExhausted(" + std::to_string(m) + ")" + at);
  }
  c.detail << (c.ok ? "P1/P2(period 2)/P3 at M=4,16,64" : "");
}

// --- 2 ---------------------------------------------------------------------

void memory_linearity(Check& c) {
  const std::vector<std::int64_t> ms{8, 64, 512};
  std::vector<std::int64_t> steps;
  for (auto m : ms) {
    MemoryReport r = measure_memory(TapeKind::bounded(static_cast<std::size_t>(m)), 1'000'000);
    const auto* measured = std::get_if<memory_report::Measured>(&r);
    c.expect(measured != nullptr && measured->cells == static_cast<std::size_t>(m),
             "M=" + std::to_string(m) + " not Measured(M)");
    steps.push_back(measured ? static_cast<std::int64_t>(measured->steps) : -1);
  }
  const std::int64_t rise = steps[1] - steps[0], run = ms[1] - ms[0];
  c.expect(rise % run == 0, "slope from first two points is not an integer");
  const std::int64_t slope = rise / run;
  const std::int64_t offset = steps[0] - slope * ms[0];
  c.expect(steps[2] == slope * ms[2] + offset, "third point off the fitted line");
  if (c.ok) c.detail << "steps(M) = " << slope << "*M + " << offset;
}

// --- 3 ---------------------------------------------------------------------

void unbounded_no_answer(Check& c) {
  for (std::uint64_t budget : {1'000ull, 100'000ull, 10'000'000ull}) {
    MemoryReport r = measure_memory(TapeKind::unbounded(), budget);
    c.expect(r == MemoryReport(memory_report::NoAnswer{budget}),
             "budget " + std::to_string(budget) + " did not yield NoAnswer");
  }
  if (c.ok) c.detail << "NoAnswer at budgets 1e3, 1e5, 1e7";
}

// --- 4 ---------------------------------------------------------------------

void alg2_same_statement(Check& c) {
  const MachineSpec spec = builtin("alg2");
  const auto input = alg2::query_input(spec);
  const RunResult inf = run(spec, TapeKind::unbounded(), 1'000'000, input);
  c.expect(inf.outcome == RunOutcome::Halted, "unbounded run did not halt");
  const std::string reference =
      symbols_to_text(spec, inf.final.tape, alg2::answer_begin(), alg2::answer_end());
  c.expect(reference == alg2::kAnswer, "unbounded answer region is '" + reference + "'");
  for (std::size_t m : {alg2::footprint(), alg2::footprint() + 1, std::size_t{64}, std::size_t{4096}}) {
    const RunResult fin = run(spec, TapeKind::bounded(m), 1'000'000, input);
    c.expect(fin.outcome == RunOutcome::Halted, "bounded run did not halt at M=" + std::to_string(m));
    c.expect(fin.steps == inf.steps, "step counts differ at M=" + std::to_string(m));
    c.expect(fin.final.tape == inf.final.tape, "tapes differ at M=" + std::to_string(m));
    c.expect(symbols_to_text(spec, fin.final.tape, alg2::answer_begin(), alg2::answer_end()) ==
                 reference,
             "answer region differs at M=" + std::to_string(m));
  }
  if (c.ok) c.detail << "both tapes answer \"" << reference << "\"";
}

// --- 5 ---------------------------------------------------------------------

void abhi_uniformity(Check& c) {
  constexpr std::size_t kShots = 100'000;
  constexpr std::size_t kBits = 4;
  // |b| = 1 for sigma_x, so dt = pi/4 gives sin^2(dt) = 1/2.
  const Hamiltonian2 h = Hamiltonian2::sigma_x();
  const auto tape = MeasurementTape::uniform(rational_from_double(std::numbers::pi / 4), kBits);
  const auto shots = sample_shots(h, QubitState::zero(), tape, kShots, 20240601);

  std::vector<std::uint64_t> ones(kBits), counts(std::size_t{1} << kBits);
  for (const auto& s : shots) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < kBits; ++k) {
      ones[k] += s.bits[k];
      idx = (idx << 1) | s.bits[k];
    }
    ++counts[idx];
  }
  std::ostringstream freqs;
  for (std::size_t k = 0; k < kBits; ++k) {
    const double f = static_cast<double>(ones[k]) / kShots;
    freqs << (k ? "," : "") << f;
    c.expect(std::abs(f - 0.5) <= 0.0047, "bit " + std::to_string(k) + " frequency out of band");
  }
  const auto exact = exact_distribution(h, QubitState::zero(), tape);
  const ChiSquareResult chi = chi_square_test(counts, exact);
  c.expect(chi.p_value > 0.001, "chi-square p = " + std::to_string(chi.p_value));
  c.detail << (c.ok ? "" : "; ") << "bit freqs " << freqs.str() << ", chi-square p=" << chi.p_value;
}

// --- 6 ---------------------------------------------------------------------

void exact_support(Check& c) {
  const Hamiltonian2 h(0.3, -0.7, Complex(0.8, -0.45));
  const QubitState psi0 = QubitState::zero();
  const auto tape = MeasurementTape::parse("0.3,0.8,1.1,1.9,2.2,2.9,3.05,3.7,4.4,5");
  const auto probs = exact_distribution(h, psi0, tape);
  c.expect(probs.size() == 1024, "expected 1024 probabilities");
  const bool positive = std::all_of(probs.begin(), probs.end(), [](double p) { return p > 0.0; });
  c.expect(positive, "a probability is not strictly positive");
  double sum = 0.0;
  for (double p : probs) sum += p;
  c.expect(std::abs(sum - 1.0) <= 1e-12, "sum deviates from 1");
  c.detail << (c.ok ? "" : "; ") << "min p=" << *std::min_element(probs.begin(), probs.end())
           << ", |sum-1|=" << std::abs(sum - 1.0);
}

// --- 7 ---------------------------------------------------------------------

void unitarity(Check& c) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> entry(-5.0, 5.0), time(0.0, 10.0);
  std::normal_distribution<double> gauss;
  double worst_norm = 0.0, worst_semigroup = 0.0;
  for (int i = 0; i < 10'000; ++i) {
    Complex coupling(entry(rng), entry(rng));
    if (std::abs(coupling) < 1e-9) coupling = 1.0;
    const Hamiltonian2 h(entry(rng), entry(rng), coupling);
    const QubitState psi =
        QubitState::normalized({gauss(rng), gauss(rng)}, {gauss(rng), gauss(rng)});
    const double t1 = time(rng), t2 = time(rng);

    auto [v0, v1] = propagator(h, t1).apply(psi.amp0(), psi.amp1());
    worst_norm = std::max(worst_norm, std::abs(std::norm(v0) + std::norm(v1) - 1.0));

    const QubitState split = evolve(evolve(psi, h, t1), h, t2);
    const QubitState joint = evolve(psi, h, t1 + t2);
    worst_semigroup = std::max({worst_semigroup, std::abs(split.amp0() - joint.amp0()),
                                std::abs(split.amp1() - joint.amp1())});
  }
  c.expect(worst_norm <= 1e-12, "norm drift above 1e-12");
  c.expect(worst_semigroup <= 1e-10, "semigroup error above 1e-10");
  c.detail << (c.ok ? "" : "; ") << "max norm drift " << worst_norm << ", max semigroup error "
           << worst_semigroup;
}

// --- 8 ---------------------------------------------------------------------

void dyadics(Check& c) {
  for (std::size_t k : {8u, 16u, 32u}) {
    const std::vector<Action> ones(k, 1);
    const Rational want = 1 - Rational(1, BigInt(1) << k);
    c.expect(simulate_agent(ones) == want, "1^" + std::to_string(k) + " not 1-2^-K");
  }
  c.expect(limit_state(ActionSequence::parse("(10)")) == Rational(2, 3), "limit of (10) != 2/3");

  AbhiSource source{{Hamiltonian2::sigma_x(), QubitState::zero()},
                    MeasurementTape::uniform(rational_from_double(std::numbers::pi / 4), 16), 8, 1};
  const auto states = reachability_experiment(source, 16, 10'000);
  Rational sum = 0;
  bool in_range = true;
  for (const auto& x : states) {
    in_range = in_range && x >= 0 && x <= 1;
    sum += x;
  }
  c.expect(states.size() == 10'000, "wrong shot count");
  c.expect(in_range, "a terminal state left [0,1]");
  const double mean = to_double(sum / states.size());
  c.expect(std::abs(mean - 0.5) <= 0.01, "mean out of band");
  c.detail << (c.ok ? "" : "; ") << "exact 1-2^-K, limit 2/3, Abhi mean " << mean;
}

// --- 9 ---------------------------------------------------------------------

void godel_roundtrip(Check& c) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> length(0, 10);
  std::uniform_int_distribution<Parameter> value(1, 16);
  int failures = 0;
  for (int i = 0; i < 10'000; ++i) {
    std::vector<Parameter> params(length(rng));
    for (auto& p : params) p = value(rng);
    if (godel_decode(godel_encode(params)) != params) ++failures;
  }
  c.expect(failures == 0, std::to_string(failures) + " round-trip failures");
  bool rejected = false;
  try {
    godel_decode(7);
  } catch (const NotAnEncoding&) {
    rejected = true;
  }
  c.expect(rejected, "7 was not rejected");
  c.expect(godel_decode(12) == std::vector<Parameter>{2, 1}, "12 did not decode to [2,1]");
  if (c.ok) c.detail << "10^4 round trips, 7 rejected, 12 -> [2,1]";
}

// --- 10 --------------------------------------------------------------------

void dsl_fixpoint(Check& c) {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(HYPERSIM_MACHINES_DIR)) {
    if (entry.path().extension() != ".tm") continue;
    ++count;
    const std::string name = entry.path().filename().string();
    try {
      const MachineSpec first = load_machine_file(entry.path());
      const std::string text = serialize(first);
      const MachineSpec second = parse_machine_spec(text);
      c.expect(second == first, name + ": reparse differs");
      c.expect(serialize(second) == text, name + ": serialization not a fixpoint");
    } catch (const Error& e) {
      c.expect(false, name + ": " + e.what());
    }
  }
  c.expect(count >= 10, "corpus has only " + std::to_string(count) + " machines");
  if (c.ok) c.detail << count << " machines";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"classification trio", classification_trio},
      {"memory measurement is linear in M", memory_linearity},
      {"unbounded tape gives no answer", unbounded_no_answer},
      {"alg2 answers identically on both tapes", alg2_same_statement},
      {"Abhi uniformity", abhi_uniformity},
      {"exact distribution support", exact_support},
      {"unitarity and semigroup", unitarity},
      {"dyadic agent states", dyadics},
      {"Goedel round trip", godel_roundtrip},
      {"DSL round-trip fixpoint", dsl_fixpoint},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu %-40s %s (%.2fs)\n", check.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                check.detail.str().c_str(), secs);
    if (!check.ok) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed),
              criteria.size());
  return failed == 0 ? 0 : 1;
}
