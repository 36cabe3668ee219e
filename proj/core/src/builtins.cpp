#include "hypersim/builtins.hpp"

#include <algorithm>

#include "hypersim/error.hpp"

namespace hypersim {
namespace {

MachineSpec make_alg1() {
  return MachineSpec({"scan"}, {"_", "1"}, "scan", "_",
                     {{"scan", "_", "1", Move::Right, "scan"},
                      {"scan", "1", "1", Move::Right, "scan"}});
}

MachineSpec make_bouncer() {
  return MachineSpec({"a", "b"}, {"_", "1"}, "a", "_",
                     {{"a", "_", "_", Move::Right, "b"},
                      {"b", "_", "_", Move::Left, "a"}});
}

MachineSpec make_empty() { return MachineSpec({"q"}, {"_", "1"}, "q", "_"); }

MachineSpec make_alg2() {
  using namespace alg2;
  std::vector<std::string> symbols{"_", std::string(kEndMarker)};
  for (std::string_view text : {kQuery, kAnswer}) {
    for (char c : text) {
      std::string name = char_symbol(c);
      if (std::find(symbols.begin(), symbols.end(), name) == symbols.end()) {
        symbols.push_back(std::move(name));
      }
    }
  }

  // check0..checkL match the query and end marker; write0..writeA-1 emit
  // the answer; the final write steps back left into `done`.
  std::vector<std::string> states;
  for (std::size_t i = 0; i <= kQuery.size(); ++i) states.push_back("check" + std::to_string(i));
  for (std::size_t j = 0; j < kAnswer.size(); ++j) states.push_back("write" + std::to_string(j));
  states.push_back("done");

  std::vector<NamedRule> rules;
  for (std::size_t i = 0; i < kQuery.size(); ++i) {
    std::string sym = char_symbol(kQuery[i]);
    rules.push_back({states[i], sym, sym, Move::Right, states[i + 1]});
  }
  rules.push_back({states[kQuery.size()], std::string(kEndMarker), std::string(kEndMarker),
                   Move::Right, "write0"});
  for (std::size_t j = 0; j < kAnswer.size(); ++j) {
    bool last = j + 1 == kAnswer.size();
    rules.push_back({"write" + std::to_string(j), "_", char_symbol(kAnswer[j]),
                     last ? Move::Left : Move::Right,
                     last ? std::string("done") : "write" + std::to_string(j + 1)});
  }
  return MachineSpec(std::move(states), std::move(symbols), "check0", "_", rules);
}

}  // namespace

MachineSpec builtin(std::string_view name) {
  if (name == "alg1") return make_alg1();
  if (name == "alg2") return make_alg2();
  if (name == "bouncer") return make_bouncer();
  if (name == "empty") return make_empty();
  throw UnknownBuiltin(std::string(name));
}

std::vector<std::string> builtin_names() { return {"alg1", "alg2", "bouncer", "empty"}; }

std::string char_symbol(char c) {
  if (c == ' ') return std::string(alg2::kSpaceSymbol);
  return std::string(1, c);
}

std::vector<SymbolId> text_to_symbols(const MachineSpec& spec, std::string_view text) {
  std::vector<SymbolId> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(spec.symbol_id(char_symbol(c)));
  return out;
}

std::string symbols_to_text(const MachineSpec& spec, const Tape& tape, std::size_t begin,
                            std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    const std::string& name = spec.symbols()[tape.at(i)];
    out += name == alg2::kSpaceSymbol ? std::string(" ") : name;
  }
  return out;
}

namespace alg2 {

std::vector<SymbolId> query_input(const MachineSpec& spec) {
  auto input = text_to_symbols(spec, kQuery);
  input.push_back(spec.symbol_id(kEndMarker));
  return input;
}

}  // namespace alg2

}  // namespace hypersim
