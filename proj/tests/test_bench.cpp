#include <doctest.h>

#include <map>

#include "support.hpp"
#include "treereduce/bench.hpp"
#include "treereduce/error.hpp"
#include "treereduce/timbuk.hpp"

using namespace treereduce;
using namespace testsupport;

TEST_CASE("generator counts are exact")
{
	TvParams p;
	p.n = 4;
	p.s = 1;
	p.td = 1.0;
	p.ad = 0.5;
	auto aut = generate(p);
	auto s = aut.stats();
	CHECK(s.leaf_rules == 2);
	CHECK(s.transitions - s.leaf_rules == 4);
	CHECK(aut.initial().size() == 1);

	for (std::uint64_t seed = 0; seed < 50; ++seed) {
		TvParams q;
		q.n = 7;
		q.s = 3;
		q.td = 2.5;
		q.ad = 0.3;
		q.roots = 2;
		q.seed = seed;
		auto g = generate(q);
		std::map<std::string, int> per_symbol;
		for (const auto& t : g.transitions())
			++per_symbol[g.alphabet().name(t.symbol)];
		CHECK(per_symbol["a0"] == 18); // round(17.5)
		CHECK(per_symbol["a1"] == 18);
		CHECK(per_symbol["a2"] == 18);
		CHECK(per_symbol["c"] == 2);   // round(2.1)
		CHECK(g.initial().size() == 2);
		CHECK(canonical(parse_timbuk(serialize_timbuk(g))) == canonical(g));
	}
}

TEST_CASE("generator is deterministic and seeds matter")
{
	TvParams p;
	p.n = 4;
	p.s = 1;
	p.td = 1.0;
	p.ad = 0.5;
	p.seed = 99;
	CHECK(serialize_timbuk(generate(p)) == serialize_timbuk(generate(p)));

	std::set<std::string> seen;
	for (std::uint64_t seed = 0; seed < 100; ++seed) {
		TvParams q;
		q.n = 10;
		q.seed = seed;
		seen.insert(serialize_timbuk(generate(q)));
	}
	CHECK(seen.size() >= 99);
}

TEST_CASE("generator capacity")
{
	TvParams p;
	p.n = 2;
	p.td = 4.5; // 9 > 8 distinct transitions
	CHECK_THROWS_AS(generate(p), PreconditionError);
	p.td = 4.0;
	CHECK_NOTHROW(generate(p));
	p.ad = 1.5;
	CHECK_THROWS_AS(generate(p), PreconditionError);
	p.ad = 1.0;
	p.roots = 3;
	CHECK_THROWS_AS(generate(p), PreconditionError);
}

TEST_CASE("grid and method parsing")
{
	auto g = parse_grid("td=1.0:6.0:0.5");
	REQUIRE(g.size() == 11);
	CHECK(g.front() == 1.0);
	CHECK(g.back() == doctest::Approx(6.0));
	CHECK(parse_grid("td=2") == std::vector<double>{2.0});
	CHECK_THROWS_AS(parse_grid("ad=1:2:1"), PreconditionError);
	CHECK_THROWS_AS(parse_grid("td=3:1:1"), PreconditionError);

	auto m = parse_method("heavy:2:4");
	CHECK(m.kind == Method::Kind::Heavy);
	CHECK(m.x == 2);
	CHECK(m.y == 4);
	CHECK(parse_method("ruq").baseline == "ruq");
	CHECK_THROWS_AS(parse_method("heavy:0:1"), PreconditionError);
	CHECK_THROWS_AS(parse_method("heavy:1:1x"), PreconditionError);
	CHECK_THROWS_AS(parse_method("fast"), PreconditionError);
}

TEST_CASE("experiment")
{
	ExperimentConfig cfg;
	cfg.td_values = {2.0};
	cfg.base.n = 8;
	cfg.methods = {"ru"};
	cfg.samples = 1;
	auto rows = experiment(cfg);
	REQUIRE(rows.size() == 1);
	CHECK(rows[0].samples == 1);
	auto csv = to_csv(rows);
	CHECK(csv.rfind("td,method,mean_states,mean_transitions,mean_ms,samples\n", 0) == 0);

	SUBCASE("byte stable and independent of workers")
	{
		ExperimentConfig c;
		c.td_values = parse_grid("td=1.0:3.0:1.0");
		c.base.n = 10;
		c.methods = {"ru", "ruqp", "heavy:1:1"};
		c.samples = 6;
		c.seed = 5;
		c.timing = false;
		c.jobs = 1;
		auto one = to_csv(experiment(c));
		c.jobs = 3;
		CHECK(to_csv(experiment(c)) == one);
		CHECK(to_csv(experiment(c)) == one);
		c.seed = 6;
		CHECK(to_csv(experiment(c)) != one);
	}

	SUBCASE("methods are ordered by strength")
	{
		ExperimentConfig c;
		c.td_values = {1.0, 2.0, 3.0, 4.0};
		c.base.n = 30;
		c.methods = {"ru", "ruq", "ruqp", "heavy:1:1"};
		c.samples = 8;
		c.seed = 1;
		auto r = experiment(c);
		for (std::size_t i = 0; i + 3 < r.size(); i += 4) {
			CHECK(r[i].mean_states >= r[i + 1].mean_states);
			CHECK(r[i + 1].mean_states >= r[i + 2].mean_states);
			CHECK(r[i + 2].mean_states >= r[i + 3].mean_states);
			CHECK(r[i + 2].mean_transitions >= r[i + 3].mean_transitions);
		}
	}
}
