#pragma once

// Test-side helpers. Everything here is deliberately naive and independent of
// the library's indexed algorithms so it can serve as a cross-check.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "treereduce/automaton.hpp"
#include "treereduce/relation.hpp"
#include "treereduce/tree.hpp"

namespace testsupport {

using namespace treereduce;

struct RandomShape
{
	unsigned n = 5;              ///< states, psi excluded
	unsigned binary = 1;         ///< rank-2 symbols
	unsigned unary = 1;          ///< rank-1 symbols
	unsigned leaves = 2;         ///< rank-0 symbols
	double density = 1.5;        ///< expected transitions per state and non-leaf symbol
	double leaf_density = 0.5;   ///< probability of each (state, leaf symbol) rule
	unsigned roots = 1;
};

/// Mixed-rank random automaton; unlike the bench generator it has unary
/// symbols and several leaf symbols, which exercises more of the games.
inline TreeAutomaton random_automaton(std::mt19937_64& rng, const RandomShape& s)
{
	RankedAlphabet sigma;
	std::vector<SymbolId> bin, un, lf;
	for (unsigned i = 0; i < s.binary; ++i)
		bin.push_back(sigma.add("a" + std::to_string(i), 2));
	for (unsigned i = 0; i < s.unary; ++i)
		un.push_back(sigma.add("b" + std::to_string(i), 1));
	for (unsigned i = 0; i < s.leaves; ++i)
		lf.push_back(sigma.add("c" + std::to_string(i), 0));

	std::vector<std::string> names;
	for (unsigned i = 0; i < s.n; ++i)
		names.push_back("s" + std::to_string(i));

	std::uniform_int_distribution<StateId> pick(1, s.n);
	std::uniform_real_distribution<double> coin(0.0, 1.0);
	auto count = [&](double mean) {
		std::poisson_distribution<unsigned> d(mean);
		return d(rng);
	};

	std::vector<Transition> delta;
	for (StateId q = 1; q <= s.n; ++q) {
		for (auto a : bin)
			for (unsigned j = count(s.density); j > 0; --j)
				delta.push_back(Transition{q, a, {pick(rng), pick(rng)}});
		for (auto a : un)
			for (unsigned j = count(s.density); j > 0; --j)
				delta.push_back(Transition{q, a, {pick(rng)}});
		for (auto a : lf)
			if (coin(rng) < s.leaf_density)
				delta.push_back(Transition{q, a, {kFinalState}});
	}
	std::set<StateId> init;
	while (init.size() < std::min(s.roots, s.n))
		init.insert(pick(rng));
	return TreeAutomaton::create(std::move(sigma), std::move(names), {init.begin(), init.end()},
		std::move(delta), "rand");
}

/// Every closed tree over @p sigma of height <= h.
inline std::vector<Tree> all_trees(const RankedAlphabet& sigma, std::size_t h)
{
	std::vector<Tree> level;
	for (std::size_t depth = 1; depth <= h; ++depth) {
		std::vector<Tree> next;
		for (const auto& sym : sigma.symbols()) {
			if (sym.rank == 0) {
				next.push_back(Tree{sym.name, {}});
				continue;
			}
			std::vector<std::size_t> idx(sym.rank, 0);
			if (level.empty())
				continue;
			while (true) {
				Tree t{sym.name, {}};
				for (auto i : idx)
					t.children.push_back(level[i]);
				next.push_back(std::move(t));
				std::size_t p = 0;
				while (p < idx.size() && ++idx[p] == level.size())
					idx[p++] = 0;
				if (p == idx.size())
					break;
			}
		}
		level = std::move(next);
	}
	return level;
}

/// Top-down search for an accepting run; exponential and obviously correct.
inline bool accepts_from(const TreeAutomaton& aut, StateId q, const Tree& t)
{
	for (const auto& tr : aut.transitions()) {
		if (tr.source != q || aut.alphabet().name(tr.symbol) != t.symbol)
			continue;
		if (tr.is_leaf_rule()) {
			if (t.children.empty())
				return true;
			continue;
		}
		if (tr.children.size() != t.children.size())
			continue;
		bool ok = true;
		for (std::size_t i = 0; ok && i < t.children.size(); ++i)
			ok = accepts_from(aut, tr.children[i], t.children[i]);
		if (ok)
			return true;
	}
	return false;
}

inline bool brute_accepts(const TreeAutomaton& aut, const Tree& t)
{
	for (auto q : aut.initial())
		if (accepts_from(aut, q, t))
			return true;
	return false;
}

inline std::set<std::string> brute_language(const TreeAutomaton& aut, std::size_t h)
{
	std::set<std::string> out;
	for (const auto& t : all_trees(aut.alphabet(), h))
		if (brute_accepts(aut, t))
			out.insert(t.to_string());
	return out;
}

/// W = D (+) U^-1 evaluated literally from its two clauses, where
/// x (D o U^-1) y means some mediator z has x D z and y U z.
inline Relation combined_by_definition(const Relation& d, const Relation& u)
{
	const std::size_t n = d.size();
	Relation w(n);
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y) {
			// clause 1: x (D o U^-1) y
			bool c1 = false;
			for (std::size_t z = 0; z < n && !c1; ++z)
				c1 = d.test(x, z) && u.test(y, z);
			if (!c1)
				continue;
			// clause 2: y D y' implies x (D o U^-1) y'
			bool c2 = true;
			for (std::size_t y2 = 0; y2 < n && c2; ++y2) {
				if (!d.test(y, y2))
					continue;
				bool found = false;
				for (std::size_t z = 0; z < n && !found; ++z)
					found = d.test(x, z) && u.test(y2, z);
				c2 = found;
			}
			if (c2)
				w.set(x, y);
		}
	return w;
}

/// Name-level canonical form; equal iff the automata agree up to the order of
/// declarations.
inline std::set<std::string> canonical(const TreeAutomaton& aut)
{
	std::set<std::string> out;
	for (const auto& s : aut.alphabet().symbols())
		out.insert("op " + s.name + ":" + std::to_string(s.rank));
	for (std::size_t q = 1; q < aut.state_count(); ++q)
		out.insert("state " + aut.state_name(static_cast<StateId>(q)));
	for (auto q : aut.initial())
		out.insert("init " + aut.state_name(q));
	for (const auto& t : aut.transitions()) {
		std::string line = aut.state_name(t.source) + " " + aut.alphabet().name(t.symbol);
		for (auto c : t.children)
			line += " " + aut.state_name(c);
		out.insert(line);
	}
	return out;
}

inline StateId st(const TreeAutomaton& aut, const char* name)
{
	return *aut.find_state(name);
}

} // namespace testsupport
