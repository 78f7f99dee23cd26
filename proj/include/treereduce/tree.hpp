#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "treereduce/automaton.hpp"

namespace treereduce {

/// Node address: sequence of 1-based child indices, empty for the root.
using NodeAddress = std::vector<unsigned>;

/// A run assigns states to node addresses.
using Run = std::map<NodeAddress, StateId>;

/**
 * @brief  Finite ranked tree, symbols referenced by name.
 *
 * Canonical text is "a(t1,...,tn)" with children in order, a leaf is "a".
 */
struct Tree
{
	std::string symbol;
	std::vector<Tree> children;

	/// Number of levels; a single leaf has height 1.
	std::size_t height() const;
	std::size_t size() const;
	std::string to_string() const;

	/// Partial-map view: address -> symbol, prefix-closed.
	std::map<NodeAddress, std::string> nodes() const;

	auto operator<=>(const Tree&) const = default;
	bool operator==(const Tree&) const = default;
};

/// Parses canonical tree text; whitespace is ignored. Throws ParseError.
Tree parse_tree(std::string_view text);

/// Checks that every node has exactly rank(symbol) children and every symbol
/// is declared. Throws ValidationError otherwise.
void check_closed(const Tree& t, const RankedAlphabet& alphabet);

/// States q with t => q, computed bottom-up. Requires a closed tree.
std::vector<StateId> derivable_states(const TreeAutomaton& aut, const Tree& t);

/// t in L(aut). Throws ValidationError for unknown symbols or arity mismatches.
bool membership(const TreeAutomaton& aut, const Tree& t);

} // namespace treereduce
