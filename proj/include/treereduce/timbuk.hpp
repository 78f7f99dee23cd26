#pragma once

#include <string>
#include <string_view>

#include "treereduce/automaton.hpp"

namespace treereduce {

/**
 * Parses the bottom-up Timbuk format:
 *
 *     Ops a:2 c:1 d:0
 *     Automaton A
 *     States q1 q2 q3
 *     Final States q1
 *     Transitions
 *     d -> q3
 *     c(q3) -> q2
 *     a(q3,q2) -> q1
 *
 * Rules are reversed into top-down transitions, "Final States" become the
 * initial states, and leaf rules "d -> q" become <q, d, psi>. '#' starts a
 * comment. Throws ParseError (with line/column) on malformed input.
 */
TreeAutomaton parse_timbuk(std::string_view text);

/// Bottom-up Timbuk text. States in declaration order, rules sorted.
/// Automaton comments are emitted as leading '#' lines.
std::string serialize_timbuk(const TreeAutomaton& aut);

TreeAutomaton read_timbuk_file(const std::string& path);
void write_timbuk_file(const TreeAutomaton& aut, const std::string& path);

} // namespace treereduce
