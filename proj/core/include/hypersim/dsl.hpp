#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hypersim/machine.hpp"

namespace hypersim {

// Machine source format (.tm):
//
//   # comment
//   states: q h
//   symbols: _ 1
//   start: q
//   blank: _
//   delta:
//   q _ -> 1 R q
//
// All five headers are required; rules follow `delta:`, one per line.

/// Throws ParseError carrying the offending 1-based line.
MachineSpec parse_machine_spec(std::string_view text);

/// Canonical text: headers in fixed order, rules sorted by (state, symbol)
/// declaration order.
std::string serialize(const MachineSpec& spec);

/// Reads and parses a .tm file. Throws Error if the file cannot be read.
MachineSpec load_machine_file(const std::filesystem::path& path);

}  // namespace hypersim
