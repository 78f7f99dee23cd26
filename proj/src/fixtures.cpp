#include "treereduce/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "treereduce/error.hpp"
#include "treereduce/timbuk.hpp"

namespace treereduce {

namespace {

const char* kNotation = R"(Ops a:2 c:1 d:0 e:0 b:2
Automaton notation
States q1 q2 q3 q4 q5
Final States q1 q2
Transitions
e -> q3
d -> q5
c(q3) -> q4
c(q5) -> q4
a(q3,q4) -> q1
b(q3,q4) -> q2
)";

const char* kGfq = R"(Ops a:0 b:0 c:2
Automaton gfq
States i p q r s
Final States i
Transitions
c(p,q) -> i
c(q,r) -> i
c(r,s) -> i
a -> p
a -> q
b -> r
b -> s
)";

const char* kMicro = R"(Ops a:1 c:0 d:0
Automaton micro
States i x y
Final States i
Transitions
a(x) -> i
a(y) -> i
c -> x
c -> y
d -> y
)";

const char* kLa2 = R"(Ops a:1 b:0 c:0
Automaton la2
States u u1 u2 r r1
Final States u r
Transitions
a(u1) -> u
a(u2) -> u
b -> u1
c -> u2
a(r1) -> r
b -> r1
c -> r1
)";

const char* kFig1a = R"(Ops a:2 b:1 c:0 d:0
Automaton fig1a
States q1 q3 q4 q5 q6
Final States q1
Transitions
a(q3,q6) -> q1
a(q4,q5) -> q1
b(q4) -> q3
c -> q3
c -> q4
d -> q5
b(q6) -> q5
d -> q6
)";

const char* kFig1b = R"(Ops a:1 b:1 c:1 e:0
Automaton fig1b
States i p1 p2 p3 q1 q2 r1 r2
Final States i
Transitions
b(p1) -> i
c(p1) -> i
a(p2) -> i
a(p3) -> i
b(p3) -> i
a(q1) -> p1
a(q1) -> p2
a(q2) -> p3
a(r1) -> q1
a(r2) -> q2
e -> r1
e -> r2
)";

const char* kFig1c = R"(Ops a:1 b:1 c:1 e:0
Automaton fig1c
States i p1 p2 q1 q2 q3 f1 f2 f3
Final States i
Transitions
a(p1) -> i
a(p2) -> i
a(q1) -> p1
a(q2) -> p2
a(q3) -> p2
a(f1) -> q1
b(f1) -> q1
a(f2) -> q2
b(f3) -> q3
c(f3) -> q3
e -> f1
e -> f2
e -> f3
)";

const char* kFig1d = R"(Ops a:2 b:1 c:0 d:0
Automaton fig1d
States q1 q3 q4 q5 q6 p1 p2 p3 p4 p5 p6 p7 p8 p9 p10
Final States q1
Transitions
a(q3,q6) -> q1
a(q4,q5) -> q1
b(q4) -> q3
b(q6) -> q5
a(p1,p4) -> q3
a(p3,p4) -> q3
a(p2,p5) -> q4
a(p6,p10) -> q5
a(p6,p8) -> q5
a(p7,p9) -> q6
c -> p1
c -> p2
d -> p2
d -> p3
c -> p4
c -> p5
c -> p6
c -> p7
c -> p8
c -> p9
d -> p9
d -> p10
)";

/// Six initial states over a two-level a-skeleton whose third level uses the
/// macros T1 (one d-successor reading b or c) and T2 (two d-successors reading
/// b and c respectively), optionally extended by x/y moves. States n' copy
/// the downward behaviour of n; z moves to and from fresh states break the
/// upward symmetry between neighbours.
std::string complex_text()
{
	std::vector<std::string> states;
	std::vector<std::string> rules;
	auto state = [&](const std::string& s) {
		if (std::find(states.begin(), states.end(), s) == states.end())
			states.push_back(s);
		return s;
	};

	for (int i = 1; i <= 24; ++i)
		state(std::to_string(i));
	for (int i = 7; i <= 12; ++i)
		state(std::to_string(i) + "'");

	const std::pair<std::string, std::string> roots[6] = {
		{"7", "12'"}, {"8", "7'"}, {"9", "8'"}, {"10", "9'"}, {"11", "10'"}, {"12", "11'"}};
	for (int i = 0; i < 6; ++i)
		rules.push_back("a(" + roots[i].first + "," + roots[i].second + ") -> " + std::to_string(i + 1));

	const int level2[6][2] = {{13, 15}, {14, 16}, {17, 19}, {18, 20}, {21, 23}, {22, 24}};
	for (int i = 0; i < 6; ++i) {
		const std::string l = std::to_string(level2[i][0]);
		const std::string r = std::to_string(level2[i][1]);
		const std::string n = std::to_string(7 + i);
		rules.push_back("a(" + l + "," + r + ") -> " + n);
		rules.push_back("a(" + l + "," + r + ") -> " + n + "'");
	}

	for (const char* s : {"7", "9", "11", "7'", "9'", "11'"}) {
		const std::string fresh = state(std::string("zo") + s);
		rules.push_back("z(" + fresh + ") -> " + s);
		rules.push_back("c -> " + fresh);
	}
	for (const char* s : {"8", "8'", "18", "24"}) {
		const std::string fresh = state(std::string("zi") + s);
		rules.push_back(std::string("z(") + s + ") -> " + fresh);
	}

	struct Macro
	{
		int state;
		int kind;
		bool x;
		bool y;
	};
	const Macro macros[] = {
		{13, 1, false, true}, {14, 2, true, true}, {15, 1, false, false}, {16, 2, true, false},
		{17, 2, true, true}, {18, 1, false, false}, {19, 2, true, false}, {20, 2, true, true},
		{21, 1, false, false}, {22, 1, false, true}, {23, 2, true, true}, {24, 1, false, false},
	};
	for (const auto& m : macros) {
		const std::string s = std::to_string(m.state);
		if (m.kind == 1) {
			const std::string mid = state(s + "m");
			rules.push_back("d(" + mid + ") -> " + s);
			rules.push_back("b -> " + mid);
			rules.push_back("c -> " + mid);
		} else {
			const std::string mb = state(s + "mb");
			const std::string mc = state(s + "mc");
			rules.push_back("d(" + mb + ") -> " + s);
			rules.push_back("d(" + mc + ") -> " + s);
			rules.push_back("b -> " + mb);
			rules.push_back("c -> " + mc);
		}
		if (m.x) {
			const std::string fx = state(s + "x");
			rules.push_back("x(" + fx + ") -> " + s);
			rules.push_back("c -> " + fx);
		}
		if (m.y) {
			const std::string fy = state(s + "y");
			rules.push_back("y(" + fy + ") -> " + s);
			rules.push_back("c -> " + fy);
		}
	}

	std::ostringstream out;
	out << "Ops a:2 b:0 c:0 d:1 x:1 y:1 z:1\nAutomaton complex\nStates";
	for (const auto& s : states)
		out << ' ' << s;
	out << "\nFinal States 1 2 3 4 5 6\nTransitions\n";
	for (const auto& r : rules)
		out << r << '\n';
	return out.str();
}

std::vector<Fixture> build()
{
	using S = RelationSpec;
	std::vector<Fixture> out;
	out.reserve(16);
	auto add = [&](std::string name, std::string description, const std::string& text) -> Fixture& {
		out.push_back(Fixture{std::move(name), std::move(description), parse_timbuk(text), std::nullopt, std::nullopt,
			std::nullopt, ""});
		return out.back();
	};

	add("notation", "notation example; language a(e,c(d)), a(e,c(e)), b(e,c(d)), b(e,c(e))", kNotation);

	auto& gfq = add("gfq", "quotienting by the kernel of up-sim induced by dw-sim equivalence adds c(b,a)", kGfq);
	gfq.quotient = S::up_sim(S::dw_sim());
	gfq.witness = "c(b,a)";

	add("micro", "P(id, strict dw inclusion) removes the a-move to x", kMicro);
	add("la2", "r is below u for 2-lookahead but not for simulation", kLa2);

	auto& a = add("fig1a", "P(strict-up-sim(strict-dw-sim), id) loses a(c,d)", kFig1a);
	a.prune_u = S::up_sim(S::dw_sim(true), true);
	a.prune_d = S::identity();
	a.witness = "a(c,d)";

	auto& b = add("fig1b", "P(strict upward trace, dw-sim) loses the word aaa", kFig1b);
	b.prune_u = S::up_la(2, S::identity(), true);
	b.prune_d = S::dw_sim();
	b.witness = "a(a(a(e)))";

	auto& c = add("fig1c", "P(up-sim(id), strict downward trace) loses the word aaa", kFig1c);
	c.prune_u = S::up_sim(S::identity());
	c.prune_d = S::dw_la(2, true);
	c.witness = "a(a(a(e)))";

	auto& d = add("fig1d", "P(strict-up-sim(strict downward trace), strict-dw-sim) loses a(a(c,c),a(c,c))", kFig1d);
	d.prune_u = S::up_sim(S::dw_la(2, true), true);
	d.prune_d = S::dw_sim(true);
	d.witness = "a(a(c,c),a(c,c))";

	auto& cx = add("complex", "P(strict-up-sim(strict-dw-sim), strict downward trace) loses every run on the full binary a-tree",
		complex_text());
	cx.prune_u = S::up_sim(S::dw_sim(true), true);
	cx.prune_d = S::dw_la(2, true);
	cx.witness = "a(a(d(b),d(b)),a(d(b),d(b)))";

	return out;
}

} // namespace

const std::vector<Fixture>& fixtures()
{
	static const std::vector<Fixture> all = build();
	return all;
}

const Fixture& fixture(const std::string& name)
{
	for (const auto& f : fixtures()) {
		if (f.name == name)
			return f;
	}
	throw PreconditionError("unknown fixture '" + name + "'");
}

} // namespace treereduce
