#include <doctest.h>

#include "support.hpp"
#include "treereduce/bench.hpp"
#include "treereduce/error.hpp"
#include "treereduce/fixtures.hpp"
#include "treereduce/oracle.hpp"
#include "treereduce/timbuk.hpp"

using namespace treereduce;
using namespace testsupport;

namespace {

const char* kNotationText = "Ops a:2 c:1 d:0 e:0 b:2\nAutomaton A\nStates q1 q2 q3 q4 q5\nFinal States q1 q2\n"
							"Transitions\ne -> q3\nd -> q5\nc(q3) -> q4\nc(q5) -> q4\na(q3,q4) -> q1\nb(q3,q4) -> q2";

bool has(const TreeAutomaton& aut, const char* src, const char* sym, std::vector<const char*> kids)
{
	auto a = aut.alphabet().find(sym);
	if (!a)
		return false;
	Transition t{st(aut, src), *a, {}};
	for (auto k : kids)
		t.children.push_back(st(aut, k));
	if (kids.empty())
		t.children.push_back(kFinalState);
	return std::find(aut.transitions().begin(), aut.transitions().end(), t) != aut.transitions().end();
}

} // namespace

TEST_CASE("notation example parses top-down")
{
	auto aut = parse_timbuk(kNotationText);
	CHECK(aut.transitions().size() == 6);
	CHECK(aut.initial().size() == 2);
	CHECK(aut.is_initial(st(aut, "q1")));
	CHECK(aut.is_initial(st(aut, "q2")));
	CHECK(has(aut, "q4", "c", {"q3"}));
	CHECK(has(aut, "q4", "c", {"q5"}));
	CHECK(has(aut, "q3", "e", {}));
	CHECK(has(aut, "q1", "a", {"q3", "q4"}));
	CHECK(aut.state_name(kFinalState) == "@psi");
}

TEST_CASE("parser errors")
{
	SUBCASE("arity mismatch")
	{
		CHECK_THROWS_AS(parse_timbuk("Ops a:2 c:0\nAutomaton A\nStates q0 q1\nFinal States q0\nTransitions\na(q1) -> q0\n"),
			ParseError);
	}
	SUBCASE("undeclared state")
	{
		CHECK_THROWS_WITH_AS(parse_timbuk("Ops c:0\nAutomaton A\nStates q0\nFinal States q0\nTransitions\nc -> q9\n"),
			doctest::Contains("undeclared state"), ParseError);
	}
	SUBCASE("undeclared symbol")
	{
		CHECK_THROWS_WITH_AS(parse_timbuk("Ops c:0\nAutomaton A\nStates q0\nFinal States q0\nTransitions\nd -> q0\n"),
			doctest::Contains("undeclared symbol"), ParseError);
	}
	SUBCASE("duplicate header")
	{
		CHECK_THROWS_WITH_AS(
			parse_timbuk("Ops c:0\nAutomaton A\nAutomaton B\nStates q0\nFinal States q0\nTransitions\n"),
			doctest::Contains("duplicate automaton header"), ParseError);
	}
	SUBCASE("line and column are reported")
	{
		try {
			parse_timbuk("Ops a:2 c:0\nAutomaton A\nStates q0\nFinal States q0\nTransitions\nc -> q0\na(q0 q0) -> q0\n");
			FAIL("expected a parse error");
		} catch (const ParseError& e) {
			CHECK(e.line() == 7);
			CHECK(e.column() > 1);
		}
	}
	SUBCASE("bad tree text")
	{
		CHECK_THROWS_AS(parse_tree("a(b,"), ParseError);
	}
}

TEST_CASE("comments and whitespace are ignored")
{
	auto aut = parse_timbuk("# leading\nOps  a:2   c:0 # ranks\nAutomaton   A\nStates q0 q1\nFinal States q0\n"
							"Transitions\n  c -> q1   # leaf\na( q1 , q1 )->q0\n");
	CHECK(aut.transitions().size() == 2);
	CHECK(membership(aut, parse_tree("a(c,c)")));
}

TEST_CASE("empty transition block means the empty language")
{
	auto aut = parse_timbuk("Ops a:2 c:0\nAutomaton A\nStates q0\nFinal States q0\nTransitions\n");
	CHECK(aut.transitions().empty());
	CHECK(enumerate_language(aut, 4).empty());
	CHECK_FALSE(membership(aut, parse_tree("c")));
}

TEST_CASE("psi may not be initial or have outgoing transitions")
{
	RankedAlphabet sigma;
	auto c = sigma.add("c", 0);
	CHECK_THROWS_AS(TreeAutomaton::create(sigma, {"q"}, {kFinalState}, {}), ValidationError);
	CHECK_THROWS_AS(TreeAutomaton::create(sigma, {"q"}, {1}, {Transition{kFinalState, c, {kFinalState}}}),
		ValidationError);
	auto a = sigma.add("a", 2);
	CHECK_THROWS_AS(TreeAutomaton::create(sigma, {"q"}, {1}, {Transition{1, a, {1}}}), ValidationError);
	CHECK_THROWS_AS(TreeAutomaton::create(sigma, {"q"}, {1}, {Transition{1, a, {1, 7}}}), ValidationError);
}

TEST_CASE("serialize round trip")
{
	auto aut = parse_timbuk(kNotationText);
	auto again = parse_timbuk(serialize_timbuk(aut));
	CHECK(canonical(again) == canonical(aut));
	CHECK(serialize_timbuk(again) == serialize_timbuk(aut));

	SUBCASE("no transitions gives a header-only document")
	{
		auto empty = parse_timbuk("Ops c:0\nAutomaton E\nStates\nFinal States\nTransitions\n");
		CHECK(serialize_timbuk(empty) == "Ops c:0\nAutomaton E\nStates\nFinal States\nTransitions\n");
	}

	SUBCASE("100 generator outputs")
	{
		for (std::uint64_t seed = 0; seed < 100; ++seed) {
			TvParams p;
			p.n = 6 + seed % 5;
			p.td = 1.0 + static_cast<double>(seed % 3);
			p.seed = seed;
			auto g = generate(p);
			auto back = parse_timbuk(serialize_timbuk(g));
			REQUIRE(canonical(back) == canonical(g));
		}
	}
}

TEST_CASE("membership on the notation example")
{
	auto aut = parse_timbuk(kNotationText);
	CHECK(membership(aut, parse_tree("a(e,c(d))")));
	CHECK_FALSE(membership(aut, parse_tree("e")));
	CHECK_FALSE(membership(aut, parse_tree("a(d,c(e))")));
	CHECK_FALSE(brute_accepts(aut, parse_tree("a(d,c(e))")));
	CHECK_THROWS_AS(membership(aut, parse_tree("z")), ValidationError);
	CHECK_THROWS_AS(membership(aut, parse_tree("a(e)")), ValidationError);
}

TEST_CASE("tree text and addresses")
{
	Tree t = parse_tree(" a ( e , c(d) ) ");
	CHECK(t.to_string() == "a(e,c(d))");
	CHECK(t.height() == 3);
	CHECK(t.size() == 4);
	auto nodes = t.nodes();
	CHECK(nodes.at({}) == "a");
	CHECK(nodes.at({2, 1}) == "d");
}

TEST_CASE("membership agrees with run enumeration up to height 4")
{
	std::mt19937_64 rng(11);
	RandomShape shape;
	shape.n = 4;
	shape.leaves = 1;
	for (int i = 0; i < 40; ++i) {
		auto aut = random_automaton(rng, shape);
		for (const auto& t : all_trees(aut.alphabet(), 4))
			REQUIRE(membership(aut, t) == brute_accepts(aut, t));
	}
}

TEST_CASE("remove_useless")
{
	auto aut = parse_timbuk(kNotationText);
	CHECK(canonical(remove_useless(aut)) == canonical(aut));

	SUBCASE("no productive states")
	{
		auto dead = parse_timbuk("Ops a:2 c:0\nAutomaton A\nStates q0 q1\nFinal States q0\nTransitions\na(q1,q1) -> q0\n");
		auto r = remove_useless(dead);
		CHECK(r.state_count() == 1);
		CHECK(r.transitions().empty());
		CHECK(r.stats().states == 0);
	}

	SUBCASE("unreachable state with a leaf rule")
	{
		std::string text = std::string(kNotationText);
		text.replace(text.find("q5\n"), 3, "q5 u\n");
		text += "\ne -> u\n";
		auto with_u = parse_timbuk(text);
		auto r = remove_useless(with_u);
		CHECK_FALSE(r.find_state("u").has_value());
		CHECK(exact_language_equiv(with_u, r).equal);
	}

	SUBCASE("idempotent and membership preserving on random automata")
	{
		std::mt19937_64 rng(5);
		RandomShape shape;
		shape.unary = 0;
		shape.leaves = 1;
		for (int i = 0; i < 30; ++i) {
			shape.n = 3 + i % 8;
			shape.density = 0.6;
			auto a = random_automaton(rng, shape);
			auto r = remove_useless(a);
			REQUIRE(canonical(remove_useless(r)) == canonical(r));
			for (const auto& t : all_trees(a.alphabet(), 5))
				REQUIRE(membership(a, t) == membership(r, t));
			REQUIRE(enumerate_language(a, 6, 1000000) == enumerate_language(r, 6, 1000000));
		}
	}
}

TEST_CASE("stats")
{
	auto s = parse_timbuk(kNotationText).stats();
	CHECK(s.states == 6);
	CHECK(s.transitions == 6);
	CHECK(s.leaf_rules == 2);

	auto empty = parse_timbuk("Ops c:0\nAutomaton E\nStates\nFinal States\nTransitions\n").stats();
	CHECK(empty == AutomatonStats{});
}

TEST_CASE("fixtures are well formed")
{
	CHECK(fixture("notation").automaton.transitions().size() == 6);
	for (const auto& f : fixtures()) {
		CAPTURE(f.name);
		auto back = parse_timbuk(serialize_timbuk(f.automaton));
		CHECK(canonical(back) == canonical(f.automaton));
		if (!f.witness.empty() && f.prune_u)
			CHECK(membership(f.automaton, parse_tree(f.witness)));
	}
	CHECK_THROWS_AS(fixture("nope"), PreconditionError);
}
