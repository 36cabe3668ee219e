#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hypersim {

using StateId = std::uint32_t;
using SymbolId = std::uint16_t;

enum class Move : std::uint8_t { Left, Right };

char move_letter(Move move);

struct Rule {
  SymbolId write;
  Move move;
  StateId next;

  bool operator==(const Rule&) const = default;
};

/// One transition written with names, as it appears in machine source.
struct NamedRule {
  std::string state;
  std::string symbol;
  std::string write;
  Move move;
  std::string next;
};

/// The quadruple (states, symbols, start, transition function) plus the blank
/// symbol. The transition function is partial: a missing rule means halt.
/// Immutable once constructed.
class MachineSpec {
 public:
  /// Throws DomainError when a declared name repeats, start or blank is not
  /// declared, a rule uses an undeclared name, or two rules share a
  /// (state, symbol) pair.
  MachineSpec(std::vector<std::string> states, std::vector<std::string> symbols,
              std::string_view start, std::string_view blank,
              const std::vector<NamedRule>& rules = {});

  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  StateId start() const noexcept { return start_; }
  SymbolId blank() const noexcept { return blank_; }

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<SymbolId> find_symbol(std::string_view name) const;
  SymbolId symbol_id(std::string_view name) const;  // throws DomainError

  const Rule* rule(StateId state, SymbolId symbol) const noexcept {
    const auto& slot = table_[static_cast<std::size_t>(state) * symbols_.size() + symbol];
    return slot ? &*slot : nullptr;
  }

  std::size_t rule_count() const noexcept { return rule_count_; }

  /// Rules in (state, symbol) declaration order.
  std::vector<NamedRule> named_rules() const;

  bool operator==(const MachineSpec& other) const;

 private:
  std::vector<std::string> states_;
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, StateId> state_index_;
  std::unordered_map<std::string, SymbolId> symbol_index_;
  StateId start_ = 0;
  SymbolId blank_ = 0;
  std::vector<std::optional<Rule>> table_;
  std::size_t rule_count_ = 0;
};

/// Bounded(M) is a finite tape of M cells; Unbounded is one-way infinite.
class TapeKind {
 public:
  static TapeKind bounded(std::size_t cells);  // throws DomainError if cells == 0
  static TapeKind unbounded() { return TapeKind{}; }

  bool is_bounded() const noexcept { return cells_.has_value(); }
  /// Cell count of a bounded tape.
  std::size_t cells() const { return cells_.value(); }

  bool operator==(const TapeKind&) const = default;

 private:
  std::optional<std::size_t> cells_;
};

/// Tape contents in canonical form: a dense prefix with trailing blanks
/// trimmed, so equal contents always have equal representations.
class Tape {
 public:
  explicit Tape(SymbolId blank = 0) : blank_(blank) {}

  SymbolId blank() const noexcept { return blank_; }
  SymbolId at(std::size_t cell) const noexcept {
    return cell < cells_.size() ? cells_[cell] : blank_;
  }
  void write(std::size_t cell, SymbolId symbol);

  /// One past the last non-blank cell.
  std::size_t extent() const noexcept { return cells_.size(); }
  std::span<const SymbolId> cells() const noexcept { return cells_; }

  /// Non-blank cells as (index, symbol) pairs.
  std::vector<std::pair<std::size_t, SymbolId>> entries() const;

  bool operator==(const Tape&) const = default;

 private:
  SymbolId blank_;
  std::vector<SymbolId> cells_;
};

/// Instantaneous description. Equality and hashing cover state, head and
/// tape; visited_extent is bookkeeping and does not distinguish instants.
struct Configuration {
  StateId state = 0;
  std::size_t head = 0;
  Tape tape;
  std::size_t visited_extent = 0;

  bool operator==(const Configuration& other) const {
    return state == other.state && head == other.head && tape == other.tape;
  }
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& config) const noexcept;
};

enum class StepKind : std::uint8_t { Next, Halt, MemoryFull };
enum class HaltReason : std::uint8_t { None, NoRule, Stuck };

struct StepOutcome {
  StepKind kind;
  HaltReason reason = HaltReason::None;
  /// Configuration after the step. For a NoRule halt, the input unchanged.
  Configuration config;
};

enum class RunOutcome : std::uint8_t { Halted, BudgetExhausted, MemoryFull };

std::string_view to_string(RunOutcome outcome);

struct RunResult {
  RunOutcome outcome;
  std::uint64_t steps;
  Configuration final;
};

/// Blank tape with `input` written at cells 0..k-1, head at 0, in `start`.
/// Throws DomainError if the input does not fit on a bounded tape.
Configuration initial_configuration(const MachineSpec& spec, const TapeKind& kind,
                                    std::span<const SymbolId> input = {});

/// Applies at most one transition in place and reports what happened.
///
/// The write is applied before either boundary check: moving right from the
/// last cell of a bounded tape is MemoryFull, moving left from cell 0 halts
/// with HaltReason::Stuck. Both count as an applied transition.
StepKind advance(Configuration& config, const MachineSpec& spec, const TapeKind& kind,
                 HaltReason* reason = nullptr);

StepOutcome step(const Configuration& config, const MachineSpec& spec, const TapeKind& kind);

/// Steps until halt, MemoryFull, or `budget` transitions have been applied.
/// A halt is detected without consuming budget.
RunResult run(const MachineSpec& spec, const TapeKind& kind, std::uint64_t budget,
              std::span<const SymbolId> input = {});

RunResult run_from(Configuration config, const MachineSpec& spec, const TapeKind& kind,
                   std::uint64_t budget);

/// Symbol names of cells [begin, end), blanks included.
std::vector<std::string> tape_symbols(const MachineSpec& spec, const Tape& tape,
                                      std::size_t begin, std::size_t end);

}  // namespace hypersim
