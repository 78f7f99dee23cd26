#include <doctest.h>

#include "support.hpp"
#include "treereduce/error.hpp"
#include "treereduce/fixtures.hpp"
#include "treereduce/lookahead.hpp"
#include "treereduce/oracle.hpp"
#include "treereduce/simulation.hpp"
#include "treereduce/timbuk.hpp"

using namespace treereduce;
using namespace testsupport;

namespace {

std::vector<TreeAutomaton> random_batch(std::uint64_t seed, int count, unsigned max_n)
{
	std::mt19937_64 rng(seed);
	std::vector<TreeAutomaton> out;
	for (int i = 0; i < count; ++i) {
		RandomShape shape;
		shape.n = 2 + static_cast<unsigned>(i) % (max_n - 1);
		shape.roots = 1 + i % 3;
		shape.density = 0.7 + 0.25 * (i % 4);
		out.push_back(random_automaton(rng, shape));
	}
	return out;
}

/// The same automaton started from a single state.
TreeAutomaton rooted_at(const TreeAutomaton& aut, StateId q)
{
	std::vector<std::string> names(aut.state_names().begin() + 1, aut.state_names().end());
	return TreeAutomaton::create(aut.alphabet(), names, {q}, aut.transitions());
}

} // namespace

TEST_CASE("k = 1 collapses to simulation")
{
	for (const auto& aut : random_batch(1, 50, 8)) {
		auto id = Relation::identity(aut.state_count());
		auto d = downward_simulation(aut);
		REQUIRE(lookahead_dw(aut, 1) == d);
		REQUIRE(lookahead_dw_closed(aut, 1) == d);
		REQUIRE(lookahead_up(aut, 1, id) == upward_simulation(aut, id));
		REQUIRE(lookahead_up_closed(aut, 1, id) == upward_simulation(aut, id));
		REQUIRE(lookahead_up(aut, 1, d) == upward_simulation(aut, d));
	}
}

TEST_CASE("lookahead separates the la2 fixture")
{
	const auto& la2 = fixture("la2").automaton;
	auto r = st(la2, "r"), u = st(la2, "u");
	CHECK_FALSE(downward_simulation(la2).test(r, u));
	CHECK(lookahead_dw(la2, 2).test(r, u));
	CHECK(lookahead_dw_closed(la2, 2).test(r, u));
	CHECK(exact_dw_inclusion(la2).test(r, u));
	CHECK(brute_language(rooted_at(la2, r), 4) == brute_language(rooted_at(la2, u), 4));
}

TEST_CASE("lookahead relations are reflexive and monotone in k")
{
	for (const auto& aut : random_batch(2, 30, 7)) {
		auto id = Relation::identity(aut.state_count());
		auto d = downward_simulation(aut);
		Relation prev_dw, prev_up;
		for (unsigned k = 1; k <= 3; ++k) {
			auto dw = lookahead_dw(aut, k);
			CHECK(dw.is_reflexive());
			auto cdw = lookahead_dw_closed(aut, k);
			auto cup = lookahead_up_closed(aut, k, id);
			CHECK(id.subset_of(cup));
			CHECK(lookahead_up_closed(aut, k, d).is_preorder());
			if (k > 1) {
				CHECK(prev_dw.subset_of(cdw));
				CHECK(prev_up.subset_of(cup));
			}
			prev_dw = cdw;
			prev_up = cup;
		}
	}
}

TEST_CASE("closed downward lookahead stays below language inclusion")
{
	for (const auto& aut : random_batch(3, 30, 8)) {
		auto exact = exact_dw_inclusion(aut);
		CHECK(exact.is_preorder());
		for (unsigned k = 1; k <= 3; ++k)
			CHECK(lookahead_dw_closed(aut, k).subset_of(exact));
	}
}

TEST_CASE("empty automaton")
{
	auto aut = parse_timbuk("Ops c:0\nAutomaton E\nStates\nFinal States\nTransitions\n");
	CHECK(lookahead_dw_closed(aut, 2) == Relation::identity(1));
	CHECK(lookahead_up_closed(aut, 2, Relation::identity(1)) == Relation::identity(1));
}

TEST_CASE("upward lookahead on the quotient counterexample")
{
	const auto& gfq = fixture("gfq").automaton;
	auto eq = equivalence_kernel(downward_simulation(gfq));
	auto up = lookahead_up(gfq, 1, eq);
	std::set<std::pair<std::string, std::string>> named;
	for (auto [a, b] : up.nontrivial_pairs())
		named.insert({gfq.state_name(static_cast<StateId>(a)), gfq.state_name(static_cast<StateId>(b))});
	CHECK(named == std::set<std::pair<std::string, std::string>>{{"q", "r"}, {"r", "q"}});
}

TEST_CASE("psi is only related to psi")
{
	for (const auto& aut : random_batch(4, 20, 6)) {
		auto id = Relation::identity(aut.state_count());
		for (unsigned k = 1; k <= 3; ++k) {
			auto dw = lookahead_dw(aut, k);
			auto up = lookahead_up(aut, k, id);
			for (StateId r = 1; r < aut.state_count(); ++r) {
				CHECK_FALSE(dw.test(kFinalState, r));
				CHECK_FALSE(up.test(kFinalState, r));
			}
		}
	}
}

TEST_CASE("verdicts do not depend on Spoiler's move order")
{
	for (const auto& aut : random_batch(5, 20, 7)) {
		for (unsigned k = 2; k <= 3; ++k) {
			GameConfig fwd, rev;
			fwd.k = rev.k = k;
			rev.reverse_spoiler_order = true;
			CHECK(lookahead_dw(aut, fwd) == lookahead_dw(aut, rev));
			fwd.direction = rev.direction = Direction::Upward;
			fwd.inducing = rev.inducing = downward_simulation(aut);
			CHECK(lookahead_up(aut, fwd) == lookahead_up(aut, rev));
		}
	}
}

TEST_CASE("game configuration")
{
	GameConfig cfg;
	cfg.k = 0;
	CHECK_THROWS_AS(check_config(cfg), PreconditionError);
	cfg.k = 17;
	CHECK_THROWS_AS(check_config(cfg), PreconditionError);
	cfg.max_k = 20;
	CHECK_NOTHROW(check_config(cfg));
	cfg.k = 2;
	cfg.inducing = Relation::identity(2);
	CHECK_THROWS_AS(check_config(cfg), PreconditionError);

	const auto& aut = fixture("notation").automaton;
	CHECK_THROWS_AS(lookahead_up(aut, 2, Relation(2)), PreconditionError);
	CHECK_THROWS_AS(lookahead_dw(aut, 0), PreconditionError);
}
