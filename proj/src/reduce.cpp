#include "treereduce/reduce.hpp"

#include <chrono>
#include <functional>

#include "treereduce/error.hpp"
#include "treereduce/lookahead.hpp"
#include "treereduce/simulation.hpp"

namespace treereduce {

Relation evaluate(const TreeAutomaton& aut, const RelationSpec& spec)
{
	validate_spec(spec);
	Relation r;
	switch (spec.family) {
	case RelationFamily::Identity:
		return Relation::identity(aut.state_count());
	case RelationFamily::DwSim:
		r = downward_simulation(aut);
		break;
	case RelationFamily::DwLa:
		r = spec.k == 1 ? downward_simulation(aut) : lookahead_dw_closed(aut, spec.k);
		break;
	case RelationFamily::UpSim:
		r = upward_simulation(aut, evaluate(aut, *spec.inducing));
		break;
	case RelationFamily::UpLa: {
		Relation inducing = evaluate(aut, *spec.inducing);
		r = spec.k == 1 ? upward_simulation(aut, inducing) : lookahead_up_closed(aut, spec.k, inducing);
		break;
	}
	}
	return spec.strict ? strict_part(r) : r;
}

PruneOrder prune_order(const TreeAutomaton& aut, const Relation& u, const Relation& d, TupleLift lift)
{
	const auto& delta = aut.transitions();
	const auto m = delta.size();
	PruneOrder order{Relation(m)};
	for (SymbolId a = 0; a < aut.alphabet().size(); ++a) {
		const auto& ids = aut.by_symbol(a);
		for (auto t : ids) {
			for (auto t2 : ids) {
				const auto& x = delta[t];
				const auto& y = delta[t2];
				if (!u.test(x.source, y.source))
					continue;
				bool related = lift == TupleLift::Strict ? lift_strict(d, x.children, y.children)
														 : lift_nonstrict(d, x.children, y.children);
				if (related)
					order.pairs.set(t, t2);
			}
		}
	}
	if (!order.pairs.is_irreflexive() || !order.pairs.is_transitive())
		throw Error("transition order is not a strict partial order");
	return order;
}

PruneOrder build_prune_order(const TreeAutomaton& aut, const RelationSpec& u, const RelationSpec& d, bool force)
{
	Verdict v = gfp_allowed(u, d);
	if (!u.strict && !d.strict)
		throw CatalogError("P(" + to_string(u) + ", " + to_string(d) + ") is not a strict order: one side must be strict");
	if (v != Verdict::Yes && !force)
		throw CatalogError("P(" + to_string(u) + ", " + to_string(d) + ") is not good for pruning (" + to_string(v) + ")");

	Relation urel = evaluate(aut, u);
	if (d.strict) {
		RelationSpec pre = d;
		pre.strict = false;
		return prune_order(aut, urel, evaluate(aut, pre), TupleLift::Strict);
	}
	return prune_order(aut, urel, evaluate(aut, d), TupleLift::NonStrict);
}

TreeAutomaton prune(const TreeAutomaton& aut, const PruneOrder& order)
{
	const auto& delta = aut.transitions();
	if (order.pairs.size() != delta.size())
		throw PreconditionError("transition order does not belong to this automaton");
	std::vector<Transition> kept;
	for (std::size_t t = 0; t < delta.size(); ++t) {
		if (order.pairs.row(t).none())
			kept.push_back(delta[t]);
	}
	return aut.with_transitions(std::move(kept));
}

TreeAutomaton quotient(const TreeAutomaton& aut, const Relation& equiv)
{
	const auto n = aut.state_count();
	if (equiv.size() != n)
		throw PreconditionError("equivalence has the wrong dimension");
	auto classes = equivalence_classes(equiv);
	if (classes.front().size() != 1)
		throw PreconditionError("psi must form a class of its own");

	std::vector<StateId> rep(n);
	std::vector<std::string> names;
	std::vector<std::string> comments = aut.comments();
	for (std::size_t c = 0; c < classes.size(); ++c) {
		for (StateId q : classes[c])
			rep[q] = static_cast<StateId>(c);
		if (c == 0)
			continue;
		names.push_back(aut.state_name(classes[c].front()));
		if (classes[c].size() > 1) {
			std::string label = "merged {";
			for (std::size_t i = 0; i < classes[c].size(); ++i)
				label += (i > 0 ? "," : "") + aut.state_name(classes[c][i]);
			comments.push_back(label + "}");
		}
	}

	std::vector<StateId> initial;
	for (StateId q : aut.initial())
		initial.push_back(rep[q]);
	std::vector<Transition> transitions;
	for (const auto& t : aut.transitions()) {
		Transition nt{rep[t.source], t.symbol, {}};
		for (StateId c : t.children)
			nt.children.push_back(rep[c]);
		transitions.push_back(std::move(nt));
	}
	return TreeAutomaton::create(aut.alphabet(), std::move(names), std::move(initial), std::move(transitions),
		aut.name(), std::move(comments));
}

namespace {

class PassRunner
{
public:
	explicit PassRunner(ReductionReport* report) : report_(report) { }

	TreeAutomaton run(const std::string& name, const TreeAutomaton& aut,
		const std::function<TreeAutomaton(const TreeAutomaton&)>& pass)
	{
		auto start = std::chrono::steady_clock::now();
		TreeAutomaton out = pass(aut);
		if (report_) {
			auto before = aut.stats();
			auto after = out.stats();
			std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
			report_->passes.push_back(
				PassRecord{name, before.states, after.states, before.transitions, after.transitions, dt.count()});
		}
		return out;
	}

private:
	ReductionReport* report_;
};

TreeAutomaton quotient_by(const TreeAutomaton& aut, const RelationSpec& spec)
{
	if (gfq_allowed(spec) != Verdict::Yes)
		throw CatalogError("the kernel of '" + to_string(spec) + "' is not good for quotienting");
	return quotient(aut, equivalence_kernel(evaluate(aut, spec)));
}

TreeAutomaton prune_by(const TreeAutomaton& aut, const RelationSpec& u, const RelationSpec& d)
{
	return prune(aut, build_prune_order(aut, u, d));
}

RelationSpec dw_spec(unsigned x, bool strict = false)
{
	return x == 1 ? RelationSpec::dw_sim(strict) : RelationSpec::dw_la(x, strict);
}

RelationSpec up_spec(unsigned y, RelationSpec inducing, bool strict = false)
{
	return y == 1 ? RelationSpec::up_sim(std::move(inducing), strict)
				  : RelationSpec::up_la(y, std::move(inducing), strict);
}

std::pair<std::size_t, std::size_t> counts(const TreeAutomaton& aut)
{
	return {aut.state_count(), aut.transitions().size()};
}

void begin_report(ReductionReport* report, const std::string& method, const TreeAutomaton& aut)
{
	if (report && report->method.empty()) {
		report->method = method;
		report->input = aut.stats();
	}
}

void end_report(ReductionReport* report, const TreeAutomaton& aut)
{
	if (report)
		report->output = aut.stats();
}

TreeAutomaton op_passes(const TreeAutomaton& aut, unsigned x, unsigned y, PassRunner& runner)
{
	const auto id = RelationSpec::identity();
	const auto dwx = dw_spec(x);
	const auto dwx_strict = dw_spec(x, true);
	const auto upy_id = up_spec(y, id);
	const auto upy_id_strict = up_spec(y, id, true);
	const auto up_id_strict = RelationSpec::up_sim(id, true);
	const auto upy_dw = up_spec(y, RelationSpec::dw_sim());
	const auto dw_strict = RelationSpec::dw_sim(true);

	auto label = [](const RelationSpec& u, const RelationSpec& d) {
		return "prune P(" + to_string(u) + ", " + to_string(d) + ")";
	};

	TreeAutomaton a = runner.run("ru", aut, remove_useless);
	a = runner.run("quotient " + to_string(dwx), a, [&](const TreeAutomaton& b) { return quotient_by(b, dwx); });
	a = runner.run(label(id, dwx_strict), a, [&](const TreeAutomaton& b) { return prune_by(b, id, dwx_strict); });
	a = runner.run("ru", a, remove_useless);
	a = runner.run("quotient " + to_string(upy_id), a, [&](const TreeAutomaton& b) { return quotient_by(b, upy_id); });
	a = runner.run(label(upy_id_strict, id), a, [&](const TreeAutomaton& b) { return prune_by(b, upy_id_strict, id); });
	a = runner.run(label(up_id_strict, dwx), a, [&](const TreeAutomaton& b) { return prune_by(b, up_id_strict, dwx); });
	a = runner.run("ru", a, remove_useless);
	a = runner.run("quotient " + to_string(upy_id), a, [&](const TreeAutomaton& b) { return quotient_by(b, upy_id); });
	a = runner.run(label(upy_dw, dw_strict), a, [&](const TreeAutomaton& b) { return prune_by(b, upy_dw, dw_strict); });
	return runner.run("ru", a, remove_useless);
}

TreeAutomaton heavy11(const TreeAutomaton& aut, PassRunner& runner, unsigned& iterations)
{
	TreeAutomaton a = aut;
	while (true) {
		auto before = counts(a);
		a = op_passes(a, 1, 1, runner);
		++iterations;
		if (counts(a) == before)
			return a;
	}
}

} // namespace

TreeAutomaton op_xy(const TreeAutomaton& aut, unsigned x, unsigned y, ReductionReport* report)
{
	if (x == 0 || y == 0)
		throw PreconditionError("lookahead must be at least 1");
	begin_report(report, "op:" + std::to_string(x) + ":" + std::to_string(y), aut);
	PassRunner runner(report);
	TreeAutomaton out = op_passes(aut, x, y, runner);
	if (report)
		report->iterations = 1;
	end_report(report, out);
	return out;
}

TreeAutomaton heavy(const TreeAutomaton& aut, unsigned x, unsigned y, ReductionReport* report)
{
	if (x == 0 || y == 0)
		throw PreconditionError("lookahead must be at least 1");
	begin_report(report, "heavy:" + std::to_string(x) + ":" + std::to_string(y), aut);
	PassRunner runner(report);
	unsigned iterations = 0;
	TreeAutomaton a = aut;
	if (x == 1 && y == 1) {
		a = heavy11(a, runner, iterations);
	} else {
		while (true) {
			auto before = counts(a);
			unsigned inner = 0;
			a = heavy11(a, runner, inner);
			a = op_passes(a, x, y, runner);
			++iterations;
			if (counts(a) == before)
				break;
		}
	}
	if (report)
		report->iterations = iterations;
	end_report(report, a);
	return a;
}

Baseline parse_baseline(std::string_view name)
{
	if (name == "ru")
		return Baseline::RU;
	if (name == "ruq")
		return Baseline::RUQ;
	if (name == "ruqp")
		return Baseline::RUQP;
	throw PreconditionError("unknown baseline '" + std::string(name) + "'");
}

std::string to_string(Baseline b)
{
	switch (b) {
	case Baseline::RU:
		return "ru";
	case Baseline::RUQ:
		return "ruq";
	case Baseline::RUQP:
		return "ruqp";
	}
	return "ru";
}

TreeAutomaton baseline(const TreeAutomaton& aut, Baseline method, ReductionReport* report)
{
	begin_report(report, to_string(method), aut);
	PassRunner runner(report);
	const auto dw = RelationSpec::dw_sim();
	const auto dw_strict = RelationSpec::dw_sim(true);
	const auto id = RelationSpec::identity();

	TreeAutomaton a = runner.run("ru", aut, remove_useless);
	if (method != Baseline::RU)
		a = runner.run("quotient dw-sim", a, [&](const TreeAutomaton& b) { return quotient_by(b, dw); });
	if (method == Baseline::RUQP)
		a = runner.run("prune P(id, strict-dw-sim)", a, [&](const TreeAutomaton& b) { return prune_by(b, id, dw_strict); });
	if (report)
		report->iterations = 1;
	end_report(report, a);
	return a;
}

TreeAutomaton force_prune(const TreeAutomaton& aut, const RelationSpec& u, const RelationSpec& d,
	ReductionReport* report)
{
	const bool approved = gfp_allowed(u, d) == Verdict::Yes;
	const std::string label = "prune P(" + to_string(u) + ", " + to_string(d) + ")";
	begin_report(report, "force-prune", aut);
	PassRunner runner(report);
	TreeAutomaton a = runner.run(label, aut, [&](const TreeAutomaton& b) {
		return prune(b, build_prune_order(b, u, d, true));
	});
	if (!approved) {
		std::vector<Transition> keep = a.transitions();
		auto comments = a.comments();
		comments.push_back("unsound: forced " + label);
		std::vector<std::string> names(a.state_names().begin() + 1, a.state_names().end());
		a = TreeAutomaton::create(a.alphabet(), std::move(names), a.initial(), std::move(keep), a.name(),
			std::move(comments));
		if (report)
			report->sound = false;
	}
	end_report(report, a);
	return a;
}

} // namespace treereduce
