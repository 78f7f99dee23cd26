#include "treereduce/oracle.hpp"

#include <algorithm>
#include <map>

#include "treereduce/error.hpp"

namespace treereduce {

namespace {

/// Bottom-up successor of a tuple of macrostates under one symbol.
BitRow post(const TreeAutomaton& aut, std::optional<SymbolId> sym, const std::vector<const BitRow*>& kids)
{
	BitRow out(aut.state_count());
	if (!sym)
		return out;
	for (auto tid : aut.by_symbol(*sym)) {
		const auto& t = aut.transitions()[tid];
		if (t.is_leaf_rule()) {
			out.set(t.source);
			continue;
		}
		bool ok = true;
		for (std::size_t i = 0; i < t.children.size() && ok; ++i)
			ok = kids[i]->test(t.children[i]);
		if (ok)
			out.set(t.source);
	}
	return out;
}

/// Calls fn(indices) for every tuple over [0, limit)^arity with at least one
/// index >= fresh_from.
template <typename Fn>
void for_each_tuple(std::size_t arity, std::size_t limit, std::size_t fresh_from, Fn&& fn)
{
	if (limit == 0)
		return;
	std::vector<std::size_t> idx(arity, 0);
	while (true) {
		if (std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= fresh_from; }))
			fn(idx);
		std::size_t p = 0;
		for (; p < arity; ++p) {
			if (++idx[p] < limit)
				break;
			idx[p] = 0;
		}
		if (p == arity)
			return;
	}
}

void check_size(const TreeAutomaton& aut, const OracleLimits& limits)
{
	if (aut.state_count() - 1 > limits.max_states) {
		throw GuardError("oracle limited to " + std::to_string(limits.max_states) + " states, got " +
			std::to_string(aut.state_count() - 1));
	}
}

/// Ordering of subtrees inside a larger tree: comparing "s," or "s)" as text.
bool key_less(const std::string& a, const std::string& b)
{
	return (a + ')') < (b + ')');
}

} // namespace

Relation exact_dw_inclusion(const TreeAutomaton& aut, const OracleLimits& limits)
{
	check_size(aut, limits);
	const auto n = aut.state_count();
	const auto& sigma = aut.alphabet();

	std::vector<BitRow> macros;
	std::map<BitRow, std::size_t> index;
	auto add = [&](BitRow m) {
		if (index.emplace(m, macros.size()).second) {
			macros.push_back(std::move(m));
			if (macros.size() > limits.max_macrostates)
				throw GuardError("too many macrostates");
		}
	};

	std::size_t fresh_from = 0;
	for (SymbolId a = 0; a < sigma.size(); ++a) {
		if (sigma.rank(a) == 0)
			add(post(aut, a, {}));
	}
	while (fresh_from < macros.size()) {
		const std::size_t limit = macros.size();
		for (SymbolId a = 0; a < sigma.size(); ++a) {
			const unsigned rank = sigma.rank(a);
			if (rank == 0)
				continue;
			for_each_tuple(rank, limit, fresh_from, [&](const std::vector<std::size_t>& idx) {
				std::vector<const BitRow*> kids;
				for (auto i : idx)
					kids.push_back(&macros[i]);
				add(post(aut, a, kids));
			});
		}
		fresh_from = limit;
	}

	Relation incl = Relation::full(n);
	for (StateId r = 1; r < n; ++r)
		incl.reset(kFinalState, r);
	for (const auto& m : macros) {
		for (auto q = m.find_first(); q != BitRow::npos; q = m.find_next(q))
			incl.row(q) &= m;
	}
	// States with an empty language appear in no macrostate and keep a full row.
	return incl;
}

EquivResult exact_language_equiv(const TreeAutomaton& a, const TreeAutomaton& b, const OracleLimits& limits)
{
	check_size(a, limits);
	check_size(b, limits);

	// Union alphabet by name; a symbol missing on one side maps to no transitions there.
	struct Sym
	{
		std::string name;
		unsigned rank;
		std::optional<SymbolId> in_a, in_b;
	};
	std::vector<Sym> syms;
	for (const auto& s : a.alphabet().symbols())
		syms.push_back(Sym{s.name, s.rank, a.alphabet().find(s.name), std::nullopt});
	for (const auto& s : b.alphabet().symbols()) {
		auto it = std::find_if(syms.begin(), syms.end(), [&](const Sym& x) { return x.name == s.name; });
		if (it == syms.end()) {
			syms.push_back(Sym{s.name, s.rank, std::nullopt, b.alphabet().find(s.name)});
		} else {
			if (it->rank != s.rank)
				throw PreconditionError("symbol '" + s.name + "' has different ranks in the two automata");
			it->in_b = b.alphabet().find(s.name);
		}
	}
	std::sort(syms.begin(), syms.end(), [](const Sym& x, const Sym& y) { return x.name < y.name; });

	using Pair = std::pair<BitRow, BitRow>;
	std::vector<Pair> pairs;
	std::vector<std::size_t> level;
	std::map<Pair, std::size_t> index;

	auto accepting = [&](const Pair& p) {
		bool in_a = std::any_of(a.initial().begin(), a.initial().end(), [&](StateId q) { return p.first.test(q); });
		bool in_b = std::any_of(b.initial().begin(), b.initial().end(), [&](StateId q) { return p.second.test(q); });
		return in_a != in_b;
	};
	auto successor = [&](const Sym& s, const std::vector<std::size_t>& idx) {
		std::vector<const BitRow*> ka, kb;
		for (auto i : idx) {
			ka.push_back(&pairs[i].first);
			kb.push_back(&pairs[i].second);
		}
		return Pair{post(a, s.in_a, ka), post(b, s.in_b, kb)};
	};

	// Reachable pairs, level by level; level h holds pairs first reached at height h.
	std::size_t height = 1;
	bool distinguished = false;
	for (const auto& s : syms) {
		if (s.rank != 0)
			continue;
		Pair p = successor(s, {});
		if (index.emplace(p, pairs.size()).second) {
			pairs.push_back(p);
			level.push_back(1);
		}
	}
	std::size_t fresh_from = 0;
	while (true) {
		for (std::size_t i = fresh_from; i < pairs.size(); ++i)
			distinguished = distinguished || accepting(pairs[i]);
		if (distinguished || fresh_from == pairs.size())
			break;
		const std::size_t limit = pairs.size();
		++height;
		for (const auto& s : syms) {
			if (s.rank == 0)
				continue;
			for_each_tuple(s.rank, limit, fresh_from, [&](const std::vector<std::size_t>& idx) {
				Pair p = successor(s, idx);
				if (index.emplace(p, pairs.size()).second) {
					pairs.push_back(std::move(p));
					level.push_back(height);
					if (pairs.size() > limits.max_macrostates)
						throw GuardError("too many macrostate pairs");
				}
			});
		}
		fresh_from = limit;
	}
	if (!distinguished)
		return EquivResult{};

	// Smallest witness of that height: recompute best subtrees per pair up to it.
	std::vector<std::optional<std::string>> best(pairs.size());
	std::vector<std::optional<std::string>> best_plain(pairs.size());
	auto offer = [](std::optional<std::string>& slot, std::string cand, bool as_key) {
		if (!slot || (as_key ? key_less(cand, *slot) : cand < *slot))
			slot = std::move(cand);
	};
	for (std::size_t h = 1; h <= height; ++h) {
		auto next = best;
		auto next_plain = best_plain;
		for (const auto& s : syms) {
			if (s.rank == 0) {
				auto i = index.at(successor(s, {}));
				offer(next[i], s.name, true);
				offer(next_plain[i], s.name, false);
				continue;
			}
			std::vector<std::size_t> usable;
			for (std::size_t i = 0; i < pairs.size(); ++i) {
				if (best[i])
					usable.push_back(i);
			}
			for_each_tuple(s.rank, usable.size(), 0, [&](const std::vector<std::size_t>& pos) {
				std::vector<std::size_t> idx;
				std::string text = s.name + "(";
				for (std::size_t j = 0; j < pos.size(); ++j) {
					idx.push_back(usable[pos[j]]);
					text += (j > 0 ? "," : "") + *best[usable[pos[j]]];
				}
				text += ")";
				auto i = index.at(successor(s, idx));
				offer(next[i], text, true);
				offer(next_plain[i], std::move(text), false);
			});
		}
		best = std::move(next);
		best_plain = std::move(next_plain);
	}

	std::optional<std::string> witness;
	for (std::size_t i = 0; i < pairs.size(); ++i) {
		if (accepting(pairs[i]) && best_plain[i] && (!witness || *best_plain[i] < *witness))
			witness = best_plain[i];
	}
	return EquivResult{false, parse_tree(*witness)};
}

std::set<std::string> enumerate_language(const TreeAutomaton& aut, std::size_t max_height, std::size_t cap)
{
	const auto n = aut.state_count();
	const auto& delta = aut.transitions();
	std::vector<std::set<std::string>> trees(n);
	auto insert = [&](std::set<std::string>& into, std::string t) {
		into.insert(std::move(t));
		if (into.size() > cap)
			throw GuardError("more than " + std::to_string(cap) + " trees");
	};

	for (std::size_t h = 1; h <= max_height; ++h) {
		std::vector<std::set<std::string>> next(n);
		for (const auto& t : delta) {
			const auto& name = aut.alphabet().name(t.symbol);
			if (t.is_leaf_rule()) {
				insert(next[t.source], name);
				continue;
			}
			if (h == 1)
				continue;
			std::vector<std::vector<const std::string*>> options;
			bool empty = false;
			for (StateId c : t.children) {
				std::vector<const std::string*> opts;
				for (const auto& s : trees[c])
					opts.push_back(&s);
				empty = empty || opts.empty();
				options.push_back(std::move(opts));
			}
			if (empty)
				continue;
			std::vector<std::size_t> pick(options.size(), 0);
			while (true) {
				std::string text = name + "(";
				for (std::size_t i = 0; i < pick.size(); ++i)
					text += (i > 0 ? "," : "") + *options[i][pick[i]];
				insert(next[t.source], text + ")");
				std::size_t p = 0;
				for (; p < pick.size(); ++p) {
					if (++pick[p] < options[p].size())
						break;
					pick[p] = 0;
				}
				if (p == pick.size())
					break;
			}
		}
		trees = std::move(next);
	}

	std::set<std::string> out;
	for (StateId q : aut.initial()) {
		for (const auto& t : trees[q])
			insert(out, t);
	}
	return out;
}

Relation naive_simulation(const TreeAutomaton& aut, Direction direction, const std::optional<Relation>& inducing)
{
	const auto n = aut.state_count();
	const auto& delta = aut.transitions();
	std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, true));
	std::vector<std::vector<bool>> side;

	if (direction == Direction::Upward) {
		if (!inducing || inducing->size() != n)
			throw PreconditionError("upward simulation needs an inducing relation of matching size");
		side.assign(n, std::vector<bool>(n, false));
		for (std::size_t i = 0; i < n; ++i) {
			for (std::size_t j = 0; j < n; ++j)
				side[i][j] = inducing->test(i, j);
		}
		for (std::size_t k = 0; k < n; ++k) {
			for (std::size_t i = 0; i < n; ++i) {
				for (std::size_t j = 0; j < n; ++j) {
					if (side[i][k] && side[k][j])
						side[i][j] = true;
				}
			}
		}
	}

	for (StateId q = 0; q < n; ++q) {
		for (StateId r = 0; r < n; ++r) {
			if (q == kFinalState && r != kFinalState)
				rel[q][r] = false;
			if (direction == Direction::Upward && aut.is_initial(q) && !aut.is_initial(r))
				rel[q][r] = false;
		}
	}

	auto dw_ok = [&](StateId q, StateId r) {
		for (const auto& t : delta) {
			if (t.source != q)
				continue;
			bool found = false;
			for (const auto& u : delta) {
				if (u.source != r || u.symbol != t.symbol)
					continue;
				bool all = true;
				for (std::size_t i = 0; i < t.children.size(); ++i)
					all = all && rel[t.children[i]][u.children[i]];
				found = found || all;
			}
			if (!found)
				return false;
		}
		return true;
	};

	auto up_ok = [&](StateId q, StateId r) {
		for (const auto& t : delta) {
			for (std::size_t i = 0; i < t.children.size(); ++i) {
				if (t.children[i] != q)
					continue;
				bool found = false;
				for (const auto& u : delta) {
					if (u.symbol != t.symbol || u.children[i] != r || !rel[t.source][u.source])
						continue;
					bool all = true;
					for (std::size_t j = 0; j < t.children.size(); ++j) {
						if (j != i)
							all = all && side[t.children[j]][u.children[j]];
					}
					found = found || all;
				}
				if (!found)
					return false;
			}
		}
		return true;
	};

	bool changed = true;
	while (changed) {
		changed = false;
		for (StateId q = 0; q < n; ++q) {
			for (StateId r = 0; r < n; ++r) {
				if (!rel[q][r])
					continue;
				bool ok = direction == Direction::Downward ? dw_ok(q, r) : up_ok(q, r);
				if (!ok) {
					rel[q][r] = false;
					changed = true;
				}
			}
		}
	}

	Relation out(n);
	for (StateId q = 0; q < n; ++q) {
		for (StateId r = 0; r < n; ++r)
			out.set(q, r, rel[q][r]);
	}
	return out;
}

} // namespace treereduce
