#include "hypersim/dsl.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "hypersim/error.hpp"

namespace hypersim {
namespace {

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Header {
  std::vector<std::string> values;
  std::size_t line = 0;
};

}  // namespace

MachineSpec parse_machine_spec(std::string_view text) {
  std::optional<Header> states, symbols, start, blank;
  std::optional<std::size_t> delta_line;
  std::vector<std::pair<std::size_t, NamedRule>> rules;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (!delta_line) {
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line_no, "expected a header or 'delta:' before rules");
      }
      auto key_tokens = split_ws(line.substr(0, colon));
      if (key_tokens.size() != 1) throw ParseError(line_no, "malformed header");
      const std::string& key = key_tokens.front();
      Header header{split_ws(line.substr(colon + 1)), line_no};

      auto assign = [&](std::optional<Header>& slot) {
        if (slot) throw ParseError(line_no, "duplicate header '" + key + "'");
        slot = std::move(header);
      };
      if (key == "states") {
        assign(states);
      } else if (key == "symbols") {
        assign(symbols);
      } else if (key == "start") {
        assign(start);
      } else if (key == "blank") {
        assign(blank);
      } else if (key == "delta") {
        if (!header.values.empty()) throw ParseError(line_no, "'delta:' takes no values");
        delta_line = line_no;
      } else {
        throw ParseError(line_no, "unknown header '" + key + "'");
      }
      continue;
    }

    if (tokens.size() != 6 || tokens[2] != "->") {
      throw ParseError(line_no, "expected rule 'state symbol -> write move next'");
    }
    Move move;
    if (tokens[4] == "L") {
      move = Move::Left;
    } else if (tokens[4] == "R") {
      move = Move::Right;
    } else {
      throw ParseError(line_no, "unknown move '" + tokens[4] + "'");
    }
    rules.push_back({line_no, NamedRule{tokens[0], tokens[1], tokens[3], move, tokens[5]}});
  }
  const std::size_t last_line = std::max<std::size_t>(line_no, 1);

  auto require = [&](const std::optional<Header>& h, const char* name) -> const Header& {
    if (!h) throw ParseError(last_line, std::string("missing header '") + name + "'");
    return *h;
  };
  const Header& states_h = require(states, "states");
  const Header& symbols_h = require(symbols, "symbols");
  const Header& start_h = require(start, "start");
  const Header& blank_h = require(blank, "blank");
  if (!delta_line) throw ParseError(last_line, "missing header 'delta'");

  if (states_h.values.empty()) throw ParseError(states_h.line, "no states declared");
  if (symbols_h.values.empty()) throw ParseError(symbols_h.line, "no symbols declared");
  if (start_h.values.size() != 1) throw ParseError(start_h.line, "start takes exactly one state");
  if (blank_h.values.size() != 1) throw ParseError(blank_h.line, "blank takes exactly one symbol");

  std::unordered_set<std::string> state_set, symbol_set;
  for (const auto& s : states_h.values) {
    if (!state_set.insert(s).second) throw ParseError(states_h.line, "state '" + s + "' declared twice");
  }
  for (const auto& s : symbols_h.values) {
    if (!symbol_set.insert(s).second) throw ParseError(symbols_h.line, "symbol '" + s + "' declared twice");
  }
  if (!state_set.count(start_h.values[0])) {
    throw ParseError(start_h.line, "undeclared start state '" + start_h.values[0] + "'");
  }
  if (!symbol_set.count(blank_h.values[0])) {
    throw ParseError(blank_h.line, "undeclared blank symbol '" + blank_h.values[0] + "'");
  }

  std::unordered_set<std::string> seen_pairs;
  std::vector<NamedRule> named;
  named.reserve(rules.size());
  for (auto& [line, r] : rules) {
    for (const std::string* s : {&r.state, &r.next}) {
      if (!state_set.count(*s)) throw ParseError(line, "undeclared state '" + *s + "'");
    }
    for (const std::string* s : {&r.symbol, &r.write}) {
      if (!symbol_set.count(*s)) throw ParseError(line, "undeclared symbol '" + *s + "'");
    }
    if (!seen_pairs.insert(r.state + '\n' + r.symbol).second) {
      throw ParseError(line, "duplicate rule for (" + r.state + ", " + r.symbol + ")");
    }
    named.push_back(std::move(r));
  }

  return MachineSpec(states_h.values, symbols_h.values, start_h.values[0], blank_h.values[0],
                     named);
}

std::string serialize(const MachineSpec& spec) {
  std::ostringstream out;
  out << "states:";
  for (const auto& s : spec.states()) out << ' ' << s;
  out << "\nsymbols:";
  for (const auto& s : spec.symbols()) out << ' ' << s;
  out << "\nstart: " << spec.states()[spec.start()];
  out << "\nblank: " << spec.symbols()[spec.blank()];
  out << "\ndelta:\n";
  for (const NamedRule& r : spec.named_rules()) {
    out << r.state << ' ' << r.symbol << " -> " << r.write << ' ' << move_letter(r.move) << ' '
        << r.next << '\n';
  }
  return out.str();
}

MachineSpec load_machine_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read machine file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_machine_spec(buffer.str());
}

}  // namespace hypersim
