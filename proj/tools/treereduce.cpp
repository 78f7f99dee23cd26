// Command line front end. Exit codes: 0 success, 1 semantic negative
// (not equivalent, not a member, catalog refusal), 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "treereduce/bench.hpp"
#include "treereduce/catalog.hpp"
#include "treereduce/error.hpp"
#include "treereduce/lookahead.hpp"
#include "treereduce/oracle.hpp"
#include "treereduce/reduce.hpp"
#include "treereduce/simulation.hpp"
#include "treereduce/timbuk.hpp"
#include "treereduce/tree.hpp"

using namespace treereduce;
using json = nlohmann::json;

namespace {

struct Globals
{
	bool quiet = false;
	bool json = false;
	std::uint64_t seed = 0;
};

json stats_json(const AutomatonStats& s)
{
	return {{"states", s.states}, {"transitions", s.transitions}, {"leaf_rules", s.leaf_rules},
		{"avg_branching", s.avg_branching}};
}

json report_json(const ReductionReport& r)
{
	json passes = json::array();
	for (const auto& p : r.passes) {
		passes.push_back({{"pass", p.pass}, {"states_before", p.states_before}, {"states_after", p.states_after},
			{"transitions_before", p.transitions_before}, {"transitions_after", p.transitions_after},
			{"millis", p.millis}});
	}
	return {{"method", r.method}, {"input", stats_json(r.input)}, {"output", stats_json(r.output)},
		{"sound", r.sound}, {"iterations", r.iterations}, {"passes", passes}};
}

std::string report_text(const ReductionReport& r)
{
	std::ostringstream out;
	out << r.method << ": states " << r.input.states << " -> " << r.output.states << ", transitions "
		<< r.input.transitions << " -> " << r.output.transitions << ", " << r.passes.size() << " passes";
	if (r.iterations)
		out << ", " << r.iterations << " iterations";
	if (!r.sound)
		out << " (UNSOUND: forced prune)";
	out << '\n';
	return out.str();
}

void write_text(const std::string& text, const std::string& path)
{
	if (path.empty() || path == "-") {
		std::cout << text;
		return;
	}
	std::ofstream out(path);
	if (!out)
		throw Error("cannot write '" + path + "'");
	out << text;
}

/// Splits "U,D" at the one comma outside parentheses.
std::pair<RelationSpec, RelationSpec> parse_prune_pair(const std::string& text)
{
	int depth = 0;
	std::size_t cut = std::string::npos;
	for (std::size_t i = 0; i < text.size(); ++i) {
		if (text[i] == '(')
			++depth;
		else if (text[i] == ')')
			--depth;
		else if (text[i] == ',' && depth == 0) {
			if (cut != std::string::npos)
				throw CatalogError("--force-prune expects exactly two specs U,D");
			cut = i;
		}
	}
	if (cut == std::string::npos)
		throw CatalogError("--force-prune expects U,D");
	return {parse_spec(text.substr(0, cut)), parse_spec(text.substr(cut + 1))};
}

Relation relation_by_kind(const TreeAutomaton& aut, const std::string& kind)
{
	unsigned k = 0;
	char tail[16] = {};
	if (kind == "dw-sim")
		return downward_simulation(aut);
	if (kind == "up-sim:id")
		return upward_simulation(aut, Relation::identity(aut.state_count()));
	if (kind == "up-sim:dwsim")
		return upward_simulation(aut, downward_simulation(aut));
	if (kind == "combined") {
		Relation d = downward_simulation(aut);
		return combined_preorder(aut, d, upward_simulation(aut, d));
	}
	if (std::sscanf(kind.c_str(), "dw-la:%u%15s", &k, tail) == 1)
		return lookahead_dw_closed(aut, k);
	if (std::sscanf(kind.c_str(), "up-la:%u:%15s", &k, tail) == 2) {
		std::string ind = tail;
		if (ind == "id")
			return lookahead_up_closed(aut, k, Relation::identity(aut.state_count()));
		if (ind == "dwsim")
			return lookahead_up_closed(aut, k, downward_simulation(aut));
	}
	// anything the catalog grammar accepts, e.g. strict-up-sim(dw-la:2)
	return evaluate(aut, parse_spec(kind));
}

int exit_for(Verdict v)
{
	switch (v) {
	case Verdict::Yes: return 0;
	case Verdict::No: return 1;
	default: return 2;
	}
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Language-preserving reduction of nondeterministic tree automata"};
	app.require_subcommand(1);
	Globals g;
	app.add_flag("-q,--quiet", g.quiet, "Suppress informational output");
	app.add_flag("--json", g.json, "Machine-readable output");
	app.add_option("--seed", g.seed, "Default seed for gen and bench");

	std::string in_a, out_path, report_path;

	auto* validate = app.add_subcommand("validate", "Parse and validate a Timbuk file");
	validate->add_option("file", in_a)->required();

	auto* stats = app.add_subcommand("stats", "Print size statistics");
	stats->add_option("file", in_a)->required();

	std::string method = "heavy";
	unsigned la_dw = 1, la_up = 1;
	std::string force;
	bool verify = false;
	auto* reduce = app.add_subcommand("reduce", "Reduce an automaton");
	reduce->add_option("file", in_a)->required();
	reduce->add_option("--method", method, "ru, ruq, ruqp, heavy or none")
		->check(CLI::IsMember({"ru", "ruq", "ruqp", "heavy", "none"}));
	auto* la_dw_opt = reduce->add_option("--la-dw", la_dw, "Downward lookahead for heavy")->check(CLI::Range(1u, 16u));
	auto* la_up_opt = reduce->add_option("--la-up", la_up, "Upward lookahead for heavy")->check(CLI::Range(1u, 16u));
	reduce->add_option("--force-prune", force, "Prune with P(U,D) even if the catalog refuses");
	reduce->add_option("-o,--output", out_path, "Output Timbuk file");
	reduce->add_option("--report", report_path, "Write the JSON pass report here");
	reduce->add_flag("--verify", verify, "Check language equality with the exact oracle");

	std::string kind;
	auto* relation = app.add_subcommand("relation", "Dump a relation as sorted 'p <= q' lines");
	relation->add_option("file", in_a)->required();
	relation->add_option("--kind", kind,
		"dw-sim, up-sim:id, up-sim:dwsim, combined, dw-la:K, up-la:K:id, up-la:K:dwsim or a catalog spec")
		->required();

	std::vector<std::string> equiv;
	std::vector<std::string> gfp;
	std::string gfq;
	std::size_t oracle_states = 24;
	auto* check = app.add_subcommand("check", "Exact equivalence or catalog queries");
	check->add_option("--equiv", equiv, "Compare the languages of two automata (two files)")->expected(2);
	check->add_option("--gfp", gfp, "Is P(U,D) language preserving? (two specs)")->expected(2);
	check->add_option("--gfq", gfq, "Is quotienting by the kernel of R language preserving?");
	check->add_option("--max-states", oracle_states, "Oracle size guard");

	TvParams tv;
	std::optional<std::uint64_t> sub_seed;
	auto* gen = app.add_subcommand("gen", "Generate a Tabakov-Vardi tree automaton");
	gen->add_option("--n", tv.n, "States besides psi")->capture_default_str()->check(CLI::PositiveNumber);
	gen->add_option("--s", tv.s, "Binary symbols")->capture_default_str();
	gen->add_option("--td", tv.td, "Transitions per state and binary symbol")->capture_default_str();
	gen->add_option("--ad", tv.ad, "Fraction of states with a leaf rule")->capture_default_str();
	gen->add_option("--seed", sub_seed, "Overrides the global --seed");
	gen->add_option("--roots", tv.roots, "Initial states")->capture_default_str();
	gen->add_option("-o,--output", out_path, "Output file, stdout if absent");

	std::string grid = "td=1.0:6.0:0.5";
	std::string methods = "ru,ruq,ruqp,heavy:1:1,heavy:2:4";
	ExperimentConfig ec;
	ec.base.n = 50;
	ec.samples = 50;
	bool no_timing = false;
	auto* bench = app.add_subcommand("bench", "Run the reduction experiment and write CSV");
	bench->add_option("--grid", grid, "td=START:STOP:STEP")->capture_default_str();
	bench->add_option("--n", ec.base.n, "States per sample")->capture_default_str()->check(CLI::PositiveNumber);
	bench->add_option("--s", ec.base.s, "Binary symbols")->capture_default_str();
	bench->add_option("--ad", ec.base.ad, "Leaf-rule density")->capture_default_str();
	bench->add_option("--roots", ec.base.roots, "Initial states")->capture_default_str();
	bench->add_option("--samples", ec.samples, "Automata per grid point")->capture_default_str();
	bench->add_option("--methods", methods, "Comma list of ru, ruq, ruqp, heavy:X:Y")->capture_default_str();
	bench->add_option("--seed", sub_seed, "Overrides the global --seed");
	bench->add_option("--jobs", ec.jobs, "Worker threads, 0 = all cores");
	bench->add_flag("--no-timing", no_timing, "Write 0 for mean_ms so the CSV is byte-stable");
	bench->add_option("-o,--output", out_path, "CSV file, stdout if absent");

	std::string tree_text;
	auto* member = app.add_subcommand("member", "Is a tree accepted?");
	member->add_option("file", in_a)->required();
	member->add_option("tree", tree_text)->required();

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e, std::cerr, std::cerr);
		std::cerr << app.help();
		return 2;
	}

	try {
		if (*validate) {
			TreeAutomaton aut = read_timbuk_file(in_a);
			if (!g.quiet)
				std::cout << "ok: " << aut.stats().states << " states, " << aut.stats().transitions << " transitions\n";
			return 0;
		}

		if (*stats) {
			auto s = read_timbuk_file(in_a).stats();
			if (g.json)
				std::cout << stats_json(s).dump(2) << '\n';
			else
				std::cout << "states " << s.states << "\ntransitions " << s.transitions << "\nleaf_rules "
						  << s.leaf_rules << "\navg_branching " << s.avg_branching << '\n';
			return 0;
		}

		if (*reduce) {
			if (method != "heavy" && (la_dw_opt->count() || la_up_opt->count()))
				throw CLI::ValidationError("--la-dw/--la-up", "only meaningful with --method heavy");
			TreeAutomaton aut = read_timbuk_file(in_a);
			ReductionReport report;
			TreeAutomaton out = aut;
			if (method == "heavy")
				out = heavy(aut, la_dw, la_up, &report);
			else if (method != "none")
				out = baseline(aut, parse_baseline(method), &report);
			else {
				report.method = "none";
				report.input = report.output = aut.stats();
			}
			if (!force.empty()) {
				auto [u, d] = parse_prune_pair(force);
				ReductionReport forced;
				out = force_prune(out, u, d, &forced);
				report.passes.insert(report.passes.end(), forced.passes.begin(), forced.passes.end());
				report.sound = forced.sound;
				report.output = out.stats();
				report.method += " + " + forced.method;
			}

			write_text(serialize_timbuk(out), out_path);
			if (!report_path.empty())
				write_text(report_json(report).dump(2) + "\n", report_path);
			// with -o the report takes stdout, otherwise stdout carries the automaton
			std::ostream& info = out_path.empty() ? std::cerr : std::cout;
			if (!g.quiet)
				info << (g.json ? report_json(report).dump(2) + "\n" : report_text(report));

			if (verify) {
				auto res = exact_language_equiv(aut, out, OracleLimits{.max_states = oracle_states});
				if (!res.equal) {
					std::cerr << "language changed; witness " << res.witness->to_string() << '\n';
					return 1;
				}
				if (!g.quiet)
					std::cerr << "verified: languages equal\n";
			}
			return 0;
		}

		if (*relation) {
			TreeAutomaton aut = read_timbuk_file(in_a);
			std::cout << dump_relation(relation_by_kind(aut, kind), aut);
			return 0;
		}

		if (*check) {
			if (!gfp.empty()) {
				Verdict v = gfp_allowed(parse_spec(gfp[0]), parse_spec(gfp[1]));
				std::cout << to_string(v) << '\n';
				return exit_for(v);
			}
			if (!gfq.empty()) {
				Verdict v = gfq_allowed(parse_spec(gfq));
				std::cout << to_string(v) << '\n';
				return exit_for(v);
			}
			if (equiv.size() != 2)
				throw CLI::ValidationError("check", "expected --equiv A B, --gfp U D or --gfq R");
			auto res = exact_language_equiv(read_timbuk_file(equiv[0]), read_timbuk_file(equiv[1]),
				OracleLimits{.max_states = oracle_states});
			if (g.json) {
				json j = {{"equal", res.equal}};
				if (res.witness)
					j["witness"] = res.witness->to_string();
				std::cout << j.dump() << '\n';
			} else if (res.equal) {
				if (!g.quiet)
					std::cout << "equal\n";
			} else {
				std::cout << res.witness->to_string() << '\n';
			}
			return res.equal ? 0 : 1;
		}

		if (*gen) {
			tv.seed = sub_seed.value_or(g.seed);
			write_text(serialize_timbuk(generate(tv)), out_path);
			return 0;
		}

		if (*bench) {
			ec.td_values = parse_grid(grid);
			std::stringstream list(methods);
			for (std::string m; std::getline(list, m, ',');) {
				if (!m.empty())
					ec.methods.push_back(m);
			}
			for (const auto& m : ec.methods)
				parse_method(m);
			ec.seed = sub_seed.value_or(g.seed);
			ec.timing = !no_timing;
			auto start = std::chrono::steady_clock::now();
			write_text(to_csv(experiment(ec)), out_path);
			if (!g.quiet) {
				std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
				std::cerr << ec.td_values.size() << " points x " << ec.samples << " samples in " << dt.count() << " s\n";
			}
			return 0;
		}

		if (*member) {
			TreeAutomaton aut = read_timbuk_file(in_a);
			Tree t = parse_tree(tree_text);
			check_closed(t, aut.alphabet());
			bool in = membership(aut, t);
			if (!g.quiet)
				std::cout << (in ? "accepted" : "rejected") << '\n';
			return in ? 0 : 1;
		}
	} catch (const CLI::ValidationError& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	} catch (const Error& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	}
	return 2;
}
