#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hypersim/machine.hpp"

namespace hypersim {

/// "alg1"   scan right writing 1 on every blank, forever.
/// "alg2"   lookup table: if the preloaded input is the fixed query followed
///          by the end marker, write the fixed answer after it and halt.
/// "bouncer" shuttle between cells 0 and 1 without writing anything new.
/// "empty"  no rules.
///
/// Throws UnknownBuiltin for any other name.
MachineSpec builtin(std::string_view name);

std::vector<std::string> builtin_names();

namespace alg2 {

inline constexpr std::string_view kQuery = "Is your memory infinite?";
inline constexpr std::string_view kAnswer = "Yes, my memory is infinite!";
inline constexpr std::string_view kEndMarker = "$";
inline constexpr std::string_view kSpaceSymbol = "SP";

/// Cells holding the query and its end marker.
constexpr std::size_t input_cells() { return kQuery.size() + 1; }
/// First cell of the answer region.
constexpr std::size_t answer_begin() { return input_cells(); }
constexpr std::size_t answer_end() { return input_cells() + kAnswer.size(); }
/// Smallest bounded tape on which the lookup completes.
constexpr std::size_t footprint() { return answer_end(); }

/// Query plus end marker as symbol ids of builtin("alg2").
std::vector<SymbolId> query_input(const MachineSpec& spec);

}  // namespace alg2

/// Symbol name used for one text character in character-alphabet machines.
std::string char_symbol(char c);

/// Ids for each character of `text`. Throws DomainError on characters the
/// machine does not declare.
std::vector<SymbolId> text_to_symbols(const MachineSpec& spec, std::string_view text);

/// Inverse of text_to_symbols over cells [begin, end). Blank cells map to '_'
/// and multi-character symbol names are emitted as-is.
std::string symbols_to_text(const MachineSpec& spec, const Tape& tape, std::size_t begin,
                            std::size_t end);

}  // namespace hypersim
