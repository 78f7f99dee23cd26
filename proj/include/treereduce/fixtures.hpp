#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treereduce/automaton.hpp"
#include "treereduce/catalog.hpp"

namespace treereduce {

/**
 * @brief  A hand-transcribed automaton with its documented property.
 *
 * For pruning counterexamples, prune_u/prune_d name the order whose forced
 * use loses @p witness. For the quotient counterexample, quotient names the
 * relation whose kernel adds @p witness.
 */
struct Fixture
{
	std::string name;
	std::string description;
	TreeAutomaton automaton;
	std::optional<RelationSpec> prune_u;
	std::optional<RelationSpec> prune_d;
	std::optional<RelationSpec> quotient;
	std::string witness;
};

/// Fixtures: notation, gfq, micro, la2, fig1a, fig1b, fig1c, fig1d, complex.
/// Word automata are unary-tree automata ending in the rank-0 symbol "e".
const std::vector<Fixture>& fixtures();

/// Throws PreconditionError for an unknown name.
const Fixture& fixture(const std::string& name);

} // namespace treereduce
