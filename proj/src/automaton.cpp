#include "treereduce/automaton.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "treereduce/error.hpp"

namespace treereduce {

namespace {

const std::string kFinalStateName = "@psi";

} // namespace

SymbolId RankedAlphabet::add(std::string_view name, unsigned rank)
{
	if (name.empty())
		throw ValidationError("empty symbol name");

	auto it = index_.find(std::string(name));
	if (it != index_.end()) {
		if (symbols_[it->second].rank != rank) {
			throw ValidationError("symbol '" + std::string(name) + "' declared with ranks " +
				std::to_string(symbols_[it->second].rank) + " and " + std::to_string(rank));
		}
		return it->second;
	}

	auto id = static_cast<SymbolId>(symbols_.size());
	symbols_.push_back(Symbol{std::string(name), rank});
	index_.emplace(std::string(name), id);
	return id;
}

std::optional<SymbolId> RankedAlphabet::find(std::string_view name) const
{
	auto it = index_.find(std::string(name));
	if (it == index_.end())
		return std::nullopt;
	return it->second;
}

bool RankedAlphabet::operator==(const RankedAlphabet& other) const
{
	if (symbols_.size() != other.symbols_.size())
		return false;
	for (std::size_t i = 0; i < symbols_.size(); ++i) {
		if (symbols_[i].name != other.symbols_[i].name || symbols_[i].rank != other.symbols_[i].rank)
			return false;
	}
	return true;
}

TreeAutomaton TreeAutomaton::create(
	RankedAlphabet alphabet,
	std::vector<std::string> state_names,
	std::vector<StateId> initial,
	std::vector<Transition> transitions,
	std::string name,
	std::vector<std::string> comments)
{
	TreeAutomaton aut;
	aut.alphabet_ = std::move(alphabet);
	aut.name_ = std::move(name);
	aut.comments_ = std::move(comments);

	aut.names_.reserve(state_names.size() + 1);
	aut.names_.push_back(kFinalStateName);
	std::map<std::string, StateId, std::less<>> seen;
	for (auto& n : state_names) {
		if (n.empty())
			throw ValidationError("empty state name");
		if (n == kFinalStateName)
			throw ValidationError("state name '" + n + "' is reserved");
		auto id = static_cast<StateId>(aut.names_.size());
		if (!seen.emplace(n, id).second)
			throw ValidationError("duplicate state '" + n + "'");
		aut.names_.push_back(std::move(n));
	}

	const auto count = aut.names_.size();
	std::sort(initial.begin(), initial.end());
	initial.erase(std::unique(initial.begin(), initial.end()), initial.end());
	for (StateId q : initial) {
		if (q >= count)
			throw ValidationError("initial state id " + std::to_string(q) + " is not declared");
		if (q == kFinalState)
			throw ValidationError("the final state psi cannot be initial");
	}
	aut.initial_ = std::move(initial);
	aut.initial_flags_.assign(count, false);
	for (StateId q : aut.initial_)
		aut.initial_flags_[q] = true;

	for (const auto& t : transitions) {
		if (t.source >= count)
			throw ValidationError("transition source id " + std::to_string(t.source) + " is not declared");
		if (t.source == kFinalState)
			throw ValidationError("psi cannot have outgoing transitions");
		if (t.symbol >= aut.alphabet_.size())
			throw ValidationError("transition symbol id " + std::to_string(t.symbol) + " is not declared");
		if (t.children.empty())
			throw ValidationError("transition without targets");
		const unsigned rank = aut.alphabet_.rank(t.symbol);
		const auto& sym = aut.alphabet_.name(t.symbol);
		if (rank == 0) {
			if (!t.is_leaf_rule())
				throw ValidationError("rank-0 symbol '" + sym + "' must lead to psi");
		} else {
			if (t.children.size() != rank) {
				throw ValidationError("symbol '" + sym + "' has rank " + std::to_string(rank) +
					" but the transition has " + std::to_string(t.children.size()) + " targets");
			}
			for (StateId c : t.children) {
				if (c >= count)
					throw ValidationError("transition target id " + std::to_string(c) + " is not declared");
				if (c == kFinalState)
					throw ValidationError("psi can only be reached by rank-0 symbols");
			}
		}
	}
	std::sort(transitions.begin(), transitions.end());
	transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
	aut.transitions_ = std::move(transitions);

	aut.build_index();
	return aut;
}

TreeAutomaton TreeAutomaton::with_transitions(std::vector<Transition> transitions) const
{
	std::vector<std::string> names(names_.begin() + 1, names_.end());
	return create(alphabet_, std::move(names), initial_, std::move(transitions), name_, comments_);
}

std::optional<StateId> TreeAutomaton::find_state(std::string_view name) const
{
	for (StateId q = 0; q < names_.size(); ++q) {
		if (names_[q] == name)
			return q;
	}
	return std::nullopt;
}

void TreeAutomaton::build_index()
{
	outgoing_.assign(names_.size(), {});
	parents_.assign(names_.size(), {});
	by_symbol_.assign(alphabet_.size(), {});
	for (std::uint32_t id = 0; id < transitions_.size(); ++id) {
		const auto& t = transitions_[id];
		outgoing_[t.source].push_back(id);
		by_symbol_[t.symbol].push_back(id);
		for (std::uint32_t pos = 0; pos < t.children.size(); ++pos)
			parents_[t.children[pos]].emplace_back(id, pos);
	}
}

AutomatonStats TreeAutomaton::stats() const
{
	AutomatonStats s;
	// An automaton holding nothing but psi counts as empty.
	if (names_.size() == 1 && transitions_.empty())
		return s;

	s.states = names_.size();
	s.transitions = transitions_.size();
	std::size_t groups = 0;
	for (std::size_t i = 0; i < transitions_.size(); ++i) {
		if (transitions_[i].is_leaf_rule())
			++s.leaf_rules;
		if (i == 0 || transitions_[i].source != transitions_[i - 1].source ||
			transitions_[i].symbol != transitions_[i - 1].symbol)
			++groups;
	}
	if (groups > 0)
		s.avg_branching = static_cast<double>(s.transitions) / static_cast<double>(groups);
	return s;
}

TreeAutomaton restrict_states(const TreeAutomaton& aut, const std::vector<bool>& keep)
{
	const auto n = aut.state_count();
	std::vector<StateId> remap(n, static_cast<StateId>(-1));
	std::vector<std::string> names;
	remap[kFinalState] = kFinalState;
	for (StateId q = 1; q < n; ++q) {
		if (keep[q]) {
			remap[q] = static_cast<StateId>(names.size() + 1);
			names.push_back(aut.state_name(q));
		}
	}

	std::vector<StateId> initial;
	for (StateId q : aut.initial()) {
		if (remap[q] != static_cast<StateId>(-1))
			initial.push_back(remap[q]);
	}

	std::vector<Transition> transitions;
	for (const auto& t : aut.transitions()) {
		if (remap[t.source] == static_cast<StateId>(-1))
			continue;
		Transition nt{remap[t.source], t.symbol, {}};
		bool ok = true;
		for (StateId c : t.children) {
			if (remap[c] == static_cast<StateId>(-1)) {
				ok = false;
				break;
			}
			nt.children.push_back(remap[c]);
		}
		if (ok)
			transitions.push_back(std::move(nt));
	}
	return TreeAutomaton::create(aut.alphabet(), std::move(names), std::move(initial),
		std::move(transitions), aut.name(), aut.comments());
}

TreeAutomaton remove_useless(const TreeAutomaton& aut)
{
	const auto n = aut.state_count();
	const auto& delta = aut.transitions();

	// Productive states: least fixpoint upward from the leaf rules.
	std::vector<bool> productive(n, false);
	productive[kFinalState] = true;
	std::vector<std::uint32_t> missing(delta.size());
	std::vector<StateId> work{kFinalState};
	for (std::uint32_t id = 0; id < delta.size(); ++id)
		missing[id] = static_cast<std::uint32_t>(delta[id].children.size());
	while (!work.empty()) {
		StateId q = work.back();
		work.pop_back();
		for (auto [id, pos] : aut.parents(q)) {
			(void)pos;
			if (--missing[id] == 0) {
				StateId src = delta[id].source;
				if (!productive[src]) {
					productive[src] = true;
					work.push_back(src);
				}
			}
		}
	}

	// Reachable through transitions whose states are all productive.
	std::vector<bool> reachable(n, false);
	for (StateId q : aut.initial()) {
		if (productive[q] && !reachable[q]) {
			reachable[q] = true;
			work.push_back(q);
		}
	}
	while (!work.empty()) {
		StateId q = work.back();
		work.pop_back();
		for (auto id : aut.outgoing(q)) {
			const auto& t = delta[id];
			bool usable = std::all_of(t.children.begin(), t.children.end(),
				[&](StateId c) { return productive[c]; });
			if (!usable)
				continue;
			for (StateId c : t.children) {
				if (!reachable[c]) {
					reachable[c] = true;
					work.push_back(c);
				}
			}
		}
	}

	std::vector<bool> keep(n, false);
	for (StateId q = 1; q < n; ++q)
		keep[q] = productive[q] && reachable[q];
	return restrict_states(aut, keep);
}

} // namespace treereduce
