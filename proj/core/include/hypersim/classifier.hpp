#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypersim/machine.hpp"
#include "hypersim/rational.hpp"

namespace hypersim {

enum class Verdict : std::uint8_t { P1, P2, P3, Unknown };

std::string_view to_string(Verdict verdict);

namespace evidence {
struct Halted {
  std::uint64_t steps;
  bool operator==(const Halted&) const = default;
};
struct CycleFound {
  std::uint64_t first_visit_step;
  std::uint64_t period;
  bool operator==(const CycleFound&) const = default;
};
struct MemoryExhausted {
  std::uint64_t steps;
  std::size_t memory;
  bool operator==(const MemoryExhausted&) const = default;
};
struct BudgetExceeded {
  std::uint64_t budget;
  bool operator==(const BudgetExceeded&) const = default;
};
}  // namespace evidence

using Evidence = std::variant<evidence::Halted, evidence::CycleFound, evidence::MemoryExhausted,
                              evidence::BudgetExceeded>;

std::string_view evidence_kind(const Evidence& e);

/// Halting-behaviour verdict. The verdict is a function of the evidence:
/// Halted -> P1, CycleFound -> P2, MemoryExhausted -> P3,
/// BudgetExceeded -> Unknown.
struct HaltClass {
  Evidence evidence;
  /// Highest cell scanned during the probe.
  std::size_t visited_extent = 0;

  Verdict verdict() const noexcept { return static_cast<Verdict>(evidence.index()); }
  bool operator==(const HaltClass&) const = default;
};

/// Simulates `spec` on Bounded(memory) and records every configuration; the
/// first repeat is a cycle. The verdict is exact relative to `memory`.
HaltClass classify(const MachineSpec& spec, std::size_t memory, std::uint64_t budget,
                   std::span<const SymbolId> input = {});

namespace memory_report {
struct Measured {
  std::size_t cells;
  /// Transitions applied before MemoryFull.
  std::uint64_t steps;
  bool operator==(const Measured&) const = default;
};
struct NoAnswer {
  std::uint64_t budget;
  bool operator==(const NoAnswer&) const = default;
};
}  // namespace memory_report

using MemoryReport = std::variant<memory_report::Measured, memory_report::NoAnswer>;

/// Runs builtin("alg1") on `kind` and counts the 1s once memory is full.
/// An unbounded tape never fills, so the answer there is NoAnswer for every
/// finite budget.
MemoryReport measure_memory(const TapeKind& kind, std::uint64_t budget);

/// (n - k) / n, the chance a uniform draw from {1..n} exceeds k.
/// Throws DomainError when n == 0 or k > n.
Rational prediction_probability(std::uint64_t k, std::uint64_t n);

struct NamedMachine {
  std::string id;
  MachineSpec spec;
};

struct PartitionRow {
  std::string id;
  HaltClass result;
};

struct PartitionReport {
  std::size_t memory = 0;
  std::uint64_t budget = 0;
  std::vector<PartitionRow> rows;

  /// Halts on the bounded probe: P1 and P3.
  std::vector<std::string> halting_bounded() const;
  /// Runs forever on the bounded probe: P2.
  std::vector<std::string> nonhalting_bounded() const;
  /// Halts on an unbounded tape: P1.
  std::vector<std::string> halting_unbounded() const;
  /// Never halts on an unbounded tape: P2 and P3.
  std::vector<std::string> nonhalting_unbounded() const;
  /// Budget ran out; excluded from every derived set.
  std::vector<std::string> unknown() const;

  /// Header `spec_id,verdict,evidence_kind,steps,period`.
  std::string to_csv() const;
  std::string to_json() const;
};

PartitionReport partition_report(const std::vector<NamedMachine>& machines, std::size_t memory,
                                 std::uint64_t budget, unsigned threads = 1);

}  // namespace hypersim
