#pragma once

#include <optional>
#include <set>
#include <string>

#include "treereduce/automaton.hpp"
#include "treereduce/lookahead.hpp"
#include "treereduce/relation.hpp"
#include "treereduce/tree.hpp"

namespace treereduce {

struct OracleLimits
{
	std::size_t max_states = 12;          ///< per automaton, psi excluded
	std::size_t max_macrostates = 100000; ///< reachable (pairs of) macrostates
};

/**
 * Exact downward language inclusion: (q, r) iff D(q) ⊆ D(r). Decided by
 * bottom-up subset construction: q's language is included in r's iff every
 * reachable macrostate that contains q also contains r. Throws GuardError
 * beyond the limits.
 */
Relation exact_dw_inclusion(const TreeAutomaton& aut, const OracleLimits& limits = {});

struct EquivResult
{
	bool equal = true;
	std::optional<Tree> witness;   ///< in exactly one of the two languages
};

/**
 * L(a) = L(b) via the reachable product of both subset constructions. The
 * witness has minimal height, and among those the smallest canonical text.
 * Both automata must share the alphabet (by symbol name and rank).
 */
EquivResult exact_language_equiv(const TreeAutomaton& a, const TreeAutomaton& b,
	const OracleLimits& limits = {.max_states = 24, .max_macrostates = 100000});

/// Canonical texts of accepted trees of height <= max_height. Throws
/// GuardError when more than @p cap trees arise for any state.
std::set<std::string> enumerate_language(const TreeAutomaton& aut, std::size_t max_height, std::size_t cap = 10000);

/**
 * Textbook greatest fixpoint over an explicit pair set, written independently
 * of the simulation module. @p inducing is required for the upward direction
 * and closed transitively there.
 */
Relation naive_simulation(const TreeAutomaton& aut, Direction direction,
	const std::optional<Relation>& inducing = std::nullopt);

} // namespace treereduce
