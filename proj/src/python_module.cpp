// Python bindings: automata cross the boundary as opaque objects, relations as
// lists of state-name pairs, reports as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "treereduce/bench.hpp"
#include "treereduce/catalog.hpp"
#include "treereduce/error.hpp"
#include "treereduce/fixtures.hpp"
#include "treereduce/lookahead.hpp"
#include "treereduce/oracle.hpp"
#include "treereduce/reduce.hpp"
#include "treereduce/simulation.hpp"
#include "treereduce/timbuk.hpp"

namespace py = pybind11;
using namespace treereduce;

namespace {

py::dict stats_dict(const AutomatonStats& s)
{
	py::dict d;
	d["states"] = s.states;
	d["transitions"] = s.transitions;
	d["leaf_rules"] = s.leaf_rules;
	d["avg_branching"] = s.avg_branching;
	return d;
}

py::dict report_dict(const ReductionReport& r)
{
	py::list passes;
	for (const auto& p : r.passes) {
		py::dict d;
		d["pass"] = p.pass;
		d["states_before"] = p.states_before;
		d["states_after"] = p.states_after;
		d["transitions_before"] = p.transitions_before;
		d["transitions_after"] = p.transitions_after;
		d["millis"] = p.millis;
		passes.append(d);
	}
	py::dict d;
	d["method"] = r.method;
	d["input"] = stats_dict(r.input);
	d["output"] = stats_dict(r.output);
	d["sound"] = r.sound;
	d["iterations"] = r.iterations;
	d["passes"] = passes;
	return d;
}

std::vector<std::pair<std::string, std::string>> named_pairs(const Relation& r, const TreeAutomaton& aut)
{
	std::vector<std::pair<std::string, std::string>> out;
	for (std::size_t p = 1; p < r.size(); ++p)
		for (std::size_t q = 1; q < r.size(); ++q)
			if (r.test(p, q))
				out.emplace_back(aut.state_name(static_cast<StateId>(p)), aut.state_name(static_cast<StateId>(q)));
	return out;
}

std::vector<std::string> rule_texts(const TreeAutomaton& aut)
{
	std::vector<std::string> out;
	for (const auto& t : aut.transitions()) {
		std::string s = aut.alphabet().name(t.symbol);
		if (!t.is_leaf_rule()) {
			s += "(";
			for (std::size_t i = 0; i < t.children.size(); ++i)
				s += (i ? "," : "") + aut.state_name(t.children[i]);
			s += ")";
		}
		out.push_back(s + " -> " + aut.state_name(t.source));
	}
	return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
	m.doc() = "Simulation-based reduction of nondeterministic tree automata";

	// translators run newest first, so the base class goes in first
	auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
	py::register_exception<ParseError>(m, "ParseError", base.ptr());
	py::register_exception<CatalogError>(m, "CatalogError", base.ptr());
	py::register_exception<GuardError>(m, "GuardError", base.ptr());

	py::class_<TreeAutomaton>(m, "Automaton")
		.def_property_readonly("name", &TreeAutomaton::name)
		.def_property_readonly("states", [](const TreeAutomaton& a) {
			return std::vector<std::string>(a.state_names().begin() + 1, a.state_names().end());
		})
		.def_property_readonly("initial", [](const TreeAutomaton& a) {
			std::vector<std::string> out;
			for (auto q : a.initial())
				out.push_back(a.state_name(q));
			return out;
		})
		.def_property_readonly("rules", &rule_texts, "Bottom-up rules 'a(q1,q2) -> q'")
		.def("stats", [](const TreeAutomaton& a) { return stats_dict(a.stats()); })
		.def("accepts", [](const TreeAutomaton& a, const std::string& tree) { return membership(a, parse_tree(tree)); },
			py::arg("tree"))
		.def("to_timbuk", &serialize_timbuk)
		.def("__repr__", [](const TreeAutomaton& a) {
			auto s = a.stats();
			return "<Automaton " + a.name() + ": " + std::to_string(s.states) + " states, " +
				std::to_string(s.transitions) + " transitions>";
		});

	m.def("parse_timbuk", &parse_timbuk, py::arg("text"));
	m.def("read_timbuk", &read_timbuk_file, py::arg("path"));
	m.def("remove_useless", &remove_useless, py::arg("automaton"));
	m.def("fixture", [](const std::string& name) { return fixture(name).automaton; }, py::arg("name"));
	m.def("fixture_names", [] {
		std::vector<std::string> out;
		for (const auto& f : fixtures())
			out.push_back(f.name);
		return out;
	});

	m.def("heavy", [](const TreeAutomaton& a, unsigned x, unsigned y) {
		ReductionReport r;
		auto out = heavy(a, x, y, &r);
		return py::make_tuple(out, report_dict(r));
	}, py::arg("automaton"), py::arg("x") = 1, py::arg("y") = 1,
		"Returns (reduced automaton, report dict).");
	m.def("op", [](const TreeAutomaton& a, unsigned x, unsigned y) { return op_xy(a, x, y); },
		py::arg("automaton"), py::arg("x") = 1, py::arg("y") = 1);
	m.def("baseline", [](const TreeAutomaton& a, const std::string& method) {
		ReductionReport r;
		auto out = baseline(a, parse_baseline(method), &r);
		return py::make_tuple(out, report_dict(r));
	}, py::arg("automaton"), py::arg("method"));
	m.def("force_prune", [](const TreeAutomaton& a, const std::string& u, const std::string& d) {
		ReductionReport r;
		auto out = force_prune(a, parse_spec(u), parse_spec(d), &r);
		return py::make_tuple(out, report_dict(r));
	}, py::arg("automaton"), py::arg("u"), py::arg("d"));

	m.def("relation", [](const TreeAutomaton& a, const std::string& spec) {
		return named_pairs(evaluate(a, parse_spec(spec)), a);
	}, py::arg("automaton"), py::arg("spec"), "Pairs (p, q) of the relation a spec such as 'up-la:2(dw-sim)' names.");
	m.def("combined_preorder", [](const TreeAutomaton& a) {
		auto d = downward_simulation(a);
		return named_pairs(combined_preorder(a, d, upward_simulation(a, d)), a);
	}, py::arg("automaton"));

	m.def("gfp_allowed", [](const std::string& u, const std::string& d) {
		return to_string(gfp_allowed(parse_spec(u), parse_spec(d)));
	}, py::arg("u"), py::arg("d"));
	m.def("gfq_allowed", [](const std::string& r) { return to_string(gfq_allowed(parse_spec(r))); }, py::arg("r"));

	m.def("equivalent", [](const TreeAutomaton& a, const TreeAutomaton& b, std::size_t max_states) {
		auto res = exact_language_equiv(a, b, OracleLimits{.max_states = max_states});
		return py::make_tuple(res.equal, res.witness ? py::object(py::str(res.witness->to_string())) : py::none());
	}, py::arg("a"), py::arg("b"), py::arg("max_states") = 24,
		"Returns (equal, witness or None).");
	m.def("enumerate_language", &enumerate_language, py::arg("automaton"), py::arg("max_height"),
		py::arg("cap") = 10000);

	m.def("generate", [](unsigned n, unsigned s, double td, double ad, std::uint64_t seed, unsigned roots) {
		return generate(TvParams{n, s, td, ad, seed, roots});
	}, py::arg("n") = 10, py::arg("s") = 2, py::arg("td") = 2.0, py::arg("ad") = 0.8, py::arg("seed") = 0,
		py::arg("roots") = 1);
	m.def("bench", [](const std::string& grid, const std::vector<std::string>& methods, unsigned n, unsigned samples,
					   std::uint64_t seed, bool timing) {
		ExperimentConfig cfg;
		cfg.td_values = parse_grid(grid);
		cfg.methods = methods;
		cfg.base.n = n;
		cfg.samples = samples;
		cfg.seed = seed;
		cfg.timing = timing;
		py::gil_scoped_release unlocked;
		return to_csv(experiment(cfg));
	}, py::arg("grid"), py::arg("methods"), py::arg("n") = 50, py::arg("samples") = 50, py::arg("seed") = 0,
		py::arg("timing") = true, "Runs the experiment and returns the CSV text.");
}
