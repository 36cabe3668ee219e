#include "hypersim/machine.hpp"

#include <limits>

#include "hypersim/error.hpp"

namespace hypersim {

char move_letter(Move move) { return move == Move::Left ? 'L' : 'R'; }

MachineSpec::MachineSpec(std::vector<std::string> states, std::vector<std::string> symbols,
                         std::string_view start, std::string_view blank,
                         const std::vector<NamedRule>& rules)
    : states_(std::move(states)), symbols_(std::move(symbols)) {
  if (states_.empty()) throw DomainError("machine declares no states");
  if (symbols_.empty()) throw DomainError("machine declares no symbols");
  if (symbols_.size() > std::numeric_limits<SymbolId>::max()) {
    throw DomainError("too many symbols");
  }
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (!state_index_.emplace(states_[i], static_cast<StateId>(i)).second) {
      throw DomainError("state '" + states_[i] + "' declared twice");
    }
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!symbol_index_.emplace(symbols_[i], static_cast<SymbolId>(i)).second) {
      throw DomainError("symbol '" + symbols_[i] + "' declared twice");
    }
  }

  auto start_id = find_state(start);
  if (!start_id) throw DomainError("start state '" + std::string(start) + "' is not declared");
  start_ = *start_id;
  auto blank_id = find_symbol(blank);
  if (!blank_id) throw DomainError("blank symbol '" + std::string(blank) + "' is not declared");
  blank_ = *blank_id;

  table_.resize(states_.size() * symbols_.size());
  for (const NamedRule& r : rules) {
    auto state = find_state(r.state);
    auto next = find_state(r.next);
    auto symbol = find_symbol(r.symbol);
    auto write = find_symbol(r.write);
    if (!state) throw DomainError("undeclared state '" + r.state + "'");
    if (!next) throw DomainError("undeclared state '" + r.next + "'");
    if (!symbol) throw DomainError("undeclared symbol '" + r.symbol + "'");
    if (!write) throw DomainError("undeclared symbol '" + r.write + "'");
    auto& slot = table_[static_cast<std::size_t>(*state) * symbols_.size() + *symbol];
    if (slot) {
      throw DomainError("duplicate rule for (" + r.state + ", " + r.symbol + ")");
    }
    slot = Rule{*write, r.move, *next};
    ++rule_count_;
  }
}

std::optional<StateId> MachineSpec::find_state(std::string_view name) const {
  auto it = state_index_.find(std::string(name));
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<SymbolId> MachineSpec::find_symbol(std::string_view name) const {
  auto it = symbol_index_.find(std::string(name));
  if (it == symbol_index_.end()) return std::nullopt;
  return it->second;
}

SymbolId MachineSpec::symbol_id(std::string_view name) const {
  auto id = find_symbol(name);
  if (!id) throw DomainError("undeclared symbol '" + std::string(name) + "'");
  return *id;
}

std::vector<NamedRule> MachineSpec::named_rules() const {
  std::vector<NamedRule> out;
  out.reserve(rule_count_);
  for (std::size_t q = 0; q < states_.size(); ++q) {
    for (std::size_t s = 0; s < symbols_.size(); ++s) {
      const auto& slot = table_[q * symbols_.size() + s];
      if (!slot) continue;
      out.push_back({states_[q], symbols_[s], symbols_[slot->write], slot->move,
                     states_[slot->next]});
    }
  }
  return out;
}

bool MachineSpec::operator==(const MachineSpec& other) const {
  return states_ == other.states_ && symbols_ == other.symbols_ && start_ == other.start_ &&
         blank_ == other.blank_ && table_ == other.table_;
}

TapeKind TapeKind::bounded(std::size_t cells) {
  if (cells == 0) throw DomainError("bounded tape needs at least one cell");
  TapeKind kind;
  kind.cells_ = cells;
  return kind;
}

void Tape::write(std::size_t cell, SymbolId symbol) {
  if (cell < cells_.size()) {
    cells_[cell] = symbol;
    if (symbol == blank_ && cell + 1 == cells_.size()) {
      while (!cells_.empty() && cells_.back() == blank_) cells_.pop_back();
    }
  } else if (symbol != blank_) {
    cells_.resize(cell + 1, blank_);
    cells_[cell] = symbol;
  }
}

std::vector<std::pair<std::size_t, SymbolId>> Tape::entries() const {
  std::vector<std::pair<std::size_t, SymbolId>> out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] != blank_) out.emplace_back(i, cells_[i]);
  }
  return out;
}

std::size_t ConfigurationHash::operator()(const Configuration& config) const noexcept {
  // FNV-1a over state, head and the canonical cells.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(config.state);
  mix(config.head);
  for (SymbolId s : config.tape.cells()) {
    h ^= s;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string_view to_string(RunOutcome outcome) {
  switch (outcome) {
    case RunOutcome::Halted: return "Halted";
    case RunOutcome::BudgetExhausted: return "BudgetExhausted";
    case RunOutcome::MemoryFull: return "MemoryFull";
  }
  return "?";
}

Configuration initial_configuration(const MachineSpec& spec, const TapeKind& kind,
                                    std::span<const SymbolId> input) {
  if (kind.is_bounded() && input.size() > kind.cells()) {
    throw DomainError("input of " + std::to_string(input.size()) +
                      " cells does not fit a tape of " + std::to_string(kind.cells()));
  }
  Configuration config;
  config.state = spec.start();
  config.tape = Tape(spec.blank());
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i] >= spec.symbols().size()) throw DomainError("input symbol out of range");
    config.tape.write(i, input[i]);
  }
  return config;
}

StepKind advance(Configuration& config, const MachineSpec& spec, const TapeKind& kind,
                 HaltReason* reason) {
  const Rule* r = spec.rule(config.state, config.tape.at(config.head));
  if (r == nullptr) {
    if (reason) *reason = HaltReason::NoRule;
    return StepKind::Halt;
  }
  config.tape.write(config.head, r->write);
  config.state = r->next;
  if (r->move == Move::Left) {
    if (config.head == 0) {
      if (reason) *reason = HaltReason::Stuck;
      return StepKind::Halt;
    }
    --config.head;
  } else {
    if (kind.is_bounded() && config.head + 1 == kind.cells()) {
      if (reason) *reason = HaltReason::None;
      return StepKind::MemoryFull;
    }
    ++config.head;
    if (config.head > config.visited_extent) config.visited_extent = config.head;
  }
  if (reason) *reason = HaltReason::None;
  return StepKind::Next;
}

StepOutcome step(const Configuration& config, const MachineSpec& spec, const TapeKind& kind) {
  StepOutcome out{StepKind::Next, HaltReason::None, config};
  out.kind = advance(out.config, spec, kind, &out.reason);
  return out;
}

RunResult run_from(Configuration config, const MachineSpec& spec, const TapeKind& kind,
                   std::uint64_t budget) {
  std::uint64_t steps = 0;
  for (;;) {
    if (spec.rule(config.state, config.tape.at(config.head)) == nullptr) {
      return {RunOutcome::Halted, steps, std::move(config)};
    }
    if (steps == budget) return {RunOutcome::BudgetExhausted, steps, std::move(config)};
    StepKind kind_of_step = advance(config, spec, kind);
    ++steps;
    if (kind_of_step == StepKind::Halt) return {RunOutcome::Halted, steps, std::move(config)};
    if (kind_of_step == StepKind::MemoryFull) {
      return {RunOutcome::MemoryFull, steps, std::move(config)};
    }
  }
}

RunResult run(const MachineSpec& spec, const TapeKind& kind, std::uint64_t budget,
              std::span<const SymbolId> input) {
  return run_from(initial_configuration(spec, kind, input), spec, kind, budget);
}

std::vector<std::string> tape_symbols(const MachineSpec& spec, const Tape& tape,
                                      std::size_t begin, std::size_t end) {
  std::vector<std::string> out;
  for (std::size_t i = begin; i < end; ++i) out.push_back(spec.symbols()[tape.at(i)]);
  return out;
}

}  // namespace hypersim
