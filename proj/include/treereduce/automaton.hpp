#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace treereduce {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;

/// Id of the distinguished final state (psi). Every automaton has it.
inline constexpr StateId kFinalState = 0;

struct Symbol
{
	std::string name;
	unsigned rank = 0;
};

/**
 * @brief  Ranked alphabet; symbol ids are dense and follow declaration order.
 */
class RankedAlphabet
{
public:
	RankedAlphabet() = default;

	/// Adds a symbol, or returns the existing id if it was declared with the same rank.
	/// Throws ValidationError on a rank conflict.
	SymbolId add(std::string_view name, unsigned rank);

	std::optional<SymbolId> find(std::string_view name) const;

	const Symbol& operator[](SymbolId id) const { return symbols_.at(id); }
	unsigned rank(SymbolId id) const { return symbols_.at(id).rank; }
	const std::string& name(SymbolId id) const { return symbols_.at(id).name; }
	std::size_t size() const { return symbols_.size(); }
	const std::vector<Symbol>& symbols() const { return symbols_; }

	bool operator==(const RankedAlphabet& other) const;

private:
	std::vector<Symbol> symbols_;
	std::unordered_map<std::string, SymbolId> index_;
};

/**
 * @brief  A top-down transition <source, symbol, children>.
 *
 * Leaf rules are stored as <q, a, psi>: a single child equal to kFinalState
 * for a rank-0 symbol. This keeps upward and downward relations uniform.
 */
struct Transition
{
	StateId source = 0;
	SymbolId symbol = 0;
	std::vector<StateId> children;

	bool is_leaf_rule() const { return children.size() == 1 && children[0] == kFinalState; }

	auto operator<=>(const Transition&) const = default;
	bool operator==(const Transition&) const = default;
};

struct AutomatonStats
{
	std::size_t states = 0;          ///< including psi (0 for an automaton with nothing but psi)
	std::size_t transitions = 0;     ///< including leaf rules
	std::size_t leaf_rules = 0;
	double avg_branching = 0.0;      ///< mean number of transitions per used (state, symbol) pair

	bool operator==(const AutomatonStats&) const = default;
};

/**
 * @brief  Nondeterministic top-down tree automaton with explicit final state psi.
 *
 * Immutable once constructed. State 0 is psi; states 1.. follow declaration
 * order. Transitions are kept sorted and duplicate-free.
 */
class TreeAutomaton
{
public:
	/// Validates and builds. Throws ValidationError when an invariant fails.
	/// @p state_names excludes psi; state id i+1 gets state_names[i].
	static TreeAutomaton create(
		RankedAlphabet alphabet,
		std::vector<std::string> state_names,
		std::vector<StateId> initial,
		std::vector<Transition> transitions,
		std::string name = "A",
		std::vector<std::string> comments = {});

	/// Same as create() but reuses a validated automaton's alphabet/names.
	TreeAutomaton with_transitions(std::vector<Transition> transitions) const;

	const RankedAlphabet& alphabet() const { return alphabet_; }
	const std::string& name() const { return name_; }

	/// Number of states including psi.
	std::size_t state_count() const { return names_.size(); }
	const std::string& state_name(StateId q) const { return names_.at(q); }
	const std::vector<std::string>& state_names() const { return names_; }
	std::optional<StateId> find_state(std::string_view name) const;

	const std::vector<StateId>& initial() const { return initial_; }
	bool is_initial(StateId q) const { return initial_flags_.at(q); }

	const std::vector<Transition>& transitions() const { return transitions_; }
	const std::vector<std::string>& comments() const { return comments_; }

	/// Outgoing transition ids of @p q, in transition order.
	const std::vector<std::uint32_t>& outgoing(StateId q) const { return outgoing_.at(q); }

	/// (transition id, child position) pairs where @p q occurs as a child.
	const std::vector<std::pair<std::uint32_t, std::uint32_t>>& parents(StateId q) const { return parents_.at(q); }

	/// Transition ids by symbol.
	const std::vector<std::uint32_t>& by_symbol(SymbolId a) const { return by_symbol_.at(a); }

	AutomatonStats stats() const;

private:
	TreeAutomaton() = default;
	void build_index();

	RankedAlphabet alphabet_;
	std::string name_;
	std::vector<std::string> names_;
	std::vector<StateId> initial_;
	std::vector<bool> initial_flags_;
	std::vector<Transition> transitions_;
	std::vector<std::string> comments_;

	std::vector<std::vector<std::uint32_t>> outgoing_;
	std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> parents_;
	std::vector<std::vector<std::uint32_t>> by_symbol_;
};

/// Keeps exactly the states that are reachable from an initial state and
/// productive (derive some closed tree). Language is unchanged.
TreeAutomaton remove_useless(const TreeAutomaton& aut);

/// Restricts @p aut to the states flagged in @p keep (psi is always kept),
/// renumbering densely in the original order.
TreeAutomaton restrict_states(const TreeAutomaton& aut, const std::vector<bool>& keep);

} // namespace treereduce
