#include "hypersim/classifier.hpp"

#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "hypersim/builtins.hpp"
#include "hypersim/error.hpp"
#include "hypersim/parallel.hpp"

namespace hypersim {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::P1: return "P1";
    case Verdict::P2: return "P2";
    case Verdict::P3: return "P3";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view evidence_kind(const Evidence& e) {
  static constexpr std::string_view kNames[] = {"Halted", "CycleFound", "MemoryExhausted",
                                                "BudgetExceeded"};
  return kNames[e.index()];
}

HaltClass classify(const MachineSpec& spec, std::size_t memory, std::uint64_t budget,
                   std::span<const SymbolId> input) {
  const TapeKind kind = TapeKind::bounded(memory);
  Configuration config = initial_configuration(spec, kind, input);
  std::unordered_map<Configuration, std::uint64_t, ConfigurationHash> seen;
  seen.emplace(config, 0);

  std::uint64_t steps = 0;
  for (;;) {
    if (spec.rule(config.state, config.tape.at(config.head)) == nullptr) {
      return {evidence::Halted{steps}, config.visited_extent};
    }
    if (steps == budget) return {evidence::BudgetExceeded{budget}, config.visited_extent};

    const StepKind outcome = advance(config, spec, kind);
    ++steps;
    switch (outcome) {
      case StepKind::Halt:
        return {evidence::Halted{steps}, config.visited_extent};
      case StepKind::MemoryFull:
        return {evidence::MemoryExhausted{steps, memory}, config.visited_extent};
      case StepKind::Next:
        break;
    }
    auto [it, inserted] = seen.try_emplace(config, steps);
    if (!inserted) {
      return {evidence::CycleFound{it->second, steps - it->second}, config.visited_extent};
    }
  }
}

MemoryReport measure_memory(const TapeKind& kind, std::uint64_t budget) {
  static const MachineSpec scanner = builtin("alg1");
  const RunResult result = run(scanner, kind, budget);
  if (result.outcome != RunOutcome::MemoryFull) return memory_report::NoAnswer{budget};

  const SymbolId one = scanner.symbol_id("1");
  std::size_t ones = 0;
  for (SymbolId s : result.final.tape.cells()) ones += s == one ? 1 : 0;
  return memory_report::Measured{ones, result.steps};
}

Rational prediction_probability(std::uint64_t k, std::uint64_t n) {
  if (n == 0) throw DomainError("set size must be at least 1");
  if (k > n) throw DomainError("threshold exceeds set size");
  return Rational(BigInt(n - k), BigInt(n));
}

namespace {

std::vector<std::string> ids_where(const std::vector<PartitionRow>& rows,
                                   std::initializer_list<Verdict> verdicts) {
  std::vector<std::string> out;
  for (const auto& row : rows) {
    for (Verdict v : verdicts) {
      if (row.result.verdict() == v) {
        out.push_back(row.id);
        break;
      }
    }
  }
  return out;
}

struct EvidenceColumns {
  std::uint64_t steps;
  std::optional<std::uint64_t> period;
};

EvidenceColumns columns(const Evidence& e) {
  return std::visit(
      [](const auto& ev) -> EvidenceColumns {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, evidence::Halted>) {
          return {ev.steps, std::nullopt};
        } else if constexpr (std::is_same_v<T, evidence::CycleFound>) {
          return {ev.first_visit_step + ev.period, ev.period};
        } else if constexpr (std::is_same_v<T, evidence::MemoryExhausted>) {
          return {ev.steps, std::nullopt};
        } else {
          return {ev.budget, std::nullopt};
        }
      },
      e);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::vector<std::string> PartitionReport::halting_bounded() const {
  return ids_where(rows, {Verdict::P1, Verdict::P3});
}
std::vector<std::string> PartitionReport::nonhalting_bounded() const {
  return ids_where(rows, {Verdict::P2});
}
std::vector<std::string> PartitionReport::halting_unbounded() const {
  return ids_where(rows, {Verdict::P1});
}
std::vector<std::string> PartitionReport::nonhalting_unbounded() const {
  return ids_where(rows, {Verdict::P2, Verdict::P3});
}
std::vector<std::string> PartitionReport::unknown() const {
  return ids_where(rows, {Verdict::Unknown});
}

// `steps` is the step count at which the verdict was reached; for a cycle
// that is the first visit plus one period.
std::string PartitionReport::to_csv() const {
  std::ostringstream out;
  out << "spec_id,verdict,evidence_kind,steps,period\n";
  for (const auto& row : rows) {
    auto cols = columns(row.result.evidence);
    out << csv_field(row.id) << ',' << to_string(row.result.verdict()) << ','
        << evidence_kind(row.result.evidence) << ',' << cols.steps << ',';
    if (cols.period) out << *cols.period;
    out << '\n';
  }
  return out.str();
}

std::string PartitionReport::to_json() const {
  nlohmann::json doc;
  doc["memory"] = memory;
  doc["budget"] = budget;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json ev = {{"kind", evidence_kind(row.result.evidence)}};
    std::visit(
        [&ev](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, evidence::Halted>) {
            ev["steps"] = e.steps;
          } else if constexpr (std::is_same_v<T, evidence::CycleFound>) {
            ev["first_visit_step"] = e.first_visit_step;
            ev["period"] = e.period;
          } else if constexpr (std::is_same_v<T, evidence::MemoryExhausted>) {
            ev["steps"] = e.steps;
            ev["memory"] = e.memory;
          } else {
            ev["budget"] = e.budget;
          }
        },
        row.result.evidence);
    doc["rows"].push_back({{"spec_id", row.id},
                           {"verdict", to_string(row.result.verdict())},
                           {"evidence", ev},
                           {"visited_extent", row.result.visited_extent}});
  }
  doc["H_CM"] = halting_bounded();
  doc["H_CM_complement"] = nonhalting_bounded();
  doc["H_TM"] = halting_unbounded();
  doc["H_TM_complement"] = nonhalting_unbounded();
  doc["unknown"] = unknown();
  return doc.dump(2);
}

PartitionReport partition_report(const std::vector<NamedMachine>& machines, std::size_t memory,
                                 std::uint64_t budget, unsigned threads) {
  PartitionReport report;
  report.memory = memory;
  report.budget = budget;
  report.rows.resize(machines.size());
  parallel_for(machines.size(), threads, [&](std::size_t i) {
    report.rows[i] = {machines[i].id, classify(machines[i].spec, memory, budget)};
  });
  return report;
}

}  // namespace hypersim
