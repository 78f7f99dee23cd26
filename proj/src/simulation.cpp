#include "treereduce/simulation.hpp"

#include "treereduce/error.hpp"

namespace treereduce {

namespace {

bool children_related(const Relation& r, const std::vector<StateId>& u, const std::vector<StateId>& v)
{
	for (std::size_t i = 0; i < u.size(); ++i) {
		if (!r.test(u[i], v[i]))
			return false;
	}
	return true;
}

bool dw_step_ok(const TreeAutomaton& aut, const Relation& sim, StateId q, StateId r)
{
	const auto& delta = aut.transitions();
	for (auto tq : aut.outgoing(q)) {
		const auto& a = delta[tq];
		bool matched = false;
		for (auto tr : aut.outgoing(r)) {
			const auto& b = delta[tr];
			if (b.symbol == a.symbol && children_related(sim, a.children, b.children)) {
				matched = true;
				break;
			}
		}
		if (!matched)
			return false;
	}
	return true;
}

bool up_step_ok(const TreeAutomaton& aut, const Relation& sim, const Relation& side, StateId q, StateId r)
{
	const auto& delta = aut.transitions();
	for (auto [tq, pos] : aut.parents(q)) {
		const auto& a = delta[tq];
		bool matched = false;
		for (auto [tr, pos_r] : aut.parents(r)) {
			if (pos_r != pos)
				continue;
			const auto& b = delta[tr];
			if (b.symbol != a.symbol || !sim.test(a.source, b.source))
				continue;
			bool sides = true;
			for (std::size_t j = 0; j < a.children.size() && sides; ++j) {
				if (j != pos)
					sides = side.test(a.children[j], b.children[j]);
			}
			if (sides) {
				matched = true;
				break;
			}
		}
		if (!matched)
			return false;
	}
	return true;
}

} // namespace

Relation downward_simulation(const TreeAutomaton& aut)
{
	const auto n = aut.state_count();
	Relation sim = Relation::full(n);
	for (StateId r = 1; r < n; ++r)
		sim.reset(kFinalState, r);

	bool changed = true;
	while (changed) {
		changed = false;
		for (StateId q = 1; q < n; ++q) {
			for (StateId r = 0; r < n; ++r) {
				if (q != r && sim.test(q, r) && !dw_step_ok(aut, sim, q, r)) {
					sim.reset(q, r);
					changed = true;
				}
			}
		}
	}
	return sim;
}

Relation upward_simulation(const TreeAutomaton& aut, const Relation& inducing)
{
	const auto n = aut.state_count();
	if (inducing.size() != n)
		throw PreconditionError("inducing relation has the wrong dimension");
	const Relation side = transitive_closure(inducing);

	Relation sim = Relation::full(n);
	for (StateId q = 0; q < n; ++q) {
		for (StateId r = 0; r < n; ++r) {
			bool ok = (q != kFinalState || r == kFinalState) && (!aut.is_initial(q) || aut.is_initial(r));
			if (!ok)
				sim.reset(q, r);
		}
	}

	bool changed = true;
	while (changed) {
		changed = false;
		for (StateId q = 0; q < n; ++q) {
			for (StateId r = 0; r < n; ++r) {
				if (sim.test(q, r) && !up_step_ok(aut, sim, side, q, r)) {
					sim.reset(q, r);
					changed = true;
				}
			}
		}
	}
	return sim;
}

Relation combined_preorder(const TreeAutomaton& aut, const Relation& down, const Relation& up)
{
	const auto n = aut.state_count();
	if (down.size() != n || up.size() != n)
		throw PreconditionError("relation dimension mismatch");
	const Relation up_t = up.transpose();

	Relation w(n);
	for (std::size_t x = 0; x < n; ++x) {
		// reach = { y : exists z. x D z and y U z }
		BitRow reach(n);
		const auto& dx = down.row(x);
		for (auto z = dx.find_first(); z != BitRow::npos; z = dx.find_next(z))
			reach |= up_t.row(z);
		for (auto y = reach.find_first(); y != BitRow::npos; y = reach.find_next(y)) {
			if (down.row(y).is_subset_of(reach))
				w.set(x, y);
		}
	}
	return w;
}

} // namespace treereduce
