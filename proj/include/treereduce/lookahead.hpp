#pragma once

#include <optional>

#include "treereduce/automaton.hpp"
#include "treereduce/relation.hpp"

namespace treereduce {

enum class Direction { Downward, Upward };

struct GameConfig
{
	unsigned k = 1;
	Direction direction = Direction::Downward;
	std::optional<Relation> inducing;   ///< upward only
	unsigned max_k = 16;
	bool reverse_spoiler_order = false; ///< enumerate Spoiler moves back to front
};

/// Validates a config; throws PreconditionError when k is 0 or above max_k,
/// or when inducing is given for a downward game.
void check_config(const GameConfig& cfg);

/**
 * Maximal k-lookahead downward simulation. Reflexive, not transitive in general.
 * At k = 1 it coincides with downward_simulation().
 */
Relation lookahead_dw(const TreeAutomaton& aut, unsigned k);
Relation lookahead_dw(const TreeAutomaton& aut, const GameConfig& cfg);

/// Transitive closure of lookahead_dw.
Relation lookahead_dw_closed(const TreeAutomaton& aut, unsigned k);

/**
 * Maximal k-lookahead upward simulation induced by the transitive closure of
 * @p inducing. At k = 1 it coincides with upward_simulation().
 */
Relation lookahead_up(const TreeAutomaton& aut, unsigned k, const Relation& inducing);
Relation lookahead_up(const TreeAutomaton& aut, const GameConfig& cfg);

/// Transitive closure of lookahead_up.
Relation lookahead_up_closed(const TreeAutomaton& aut, unsigned k, const Relation& inducing);

} // namespace treereduce
