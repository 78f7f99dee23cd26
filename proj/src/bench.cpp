#include "treereduce/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <set>
#include <thread>

#include "treereduce/error.hpp"
#include "treereduce/reduce.hpp"

namespace treereduce {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
	x += 0x9e3779b97f4a7c15ULL;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
	return x ^ (x >> 31);
}

/// Uniform in [0, bound) by rejection; std distributions differ across libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
	const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
		std::numeric_limits<std::uint64_t>::max() % bound;
	while (true) {
		std::uint64_t v = rng();
		if (v < limit)
			return v % bound;
	}
}

/// Floyd's sampling of @p count distinct values from [0, range).
std::set<std::uint64_t> sample_distinct(std::mt19937_64& rng, std::uint64_t range, std::uint64_t count)
{
	std::set<std::uint64_t> out;
	for (std::uint64_t j = range - count; j < range; ++j) {
		std::uint64_t t = uniform_below(rng, j + 1);
		if (!out.insert(t).second)
			out.insert(j);
	}
	return out;
}

std::uint64_t round_half_up(double v)
{
	return static_cast<std::uint64_t>(std::floor(v + 0.5));
}

} // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t point, std::uint64_t sample)
{
	return splitmix64(splitmix64(splitmix64(seed) ^ point) ^ sample);
}

TreeAutomaton generate(const TvParams& p)
{
	if (p.n == 0)
		throw PreconditionError("generator needs at least one state");
	if (p.td < 0 || p.ad < 0 || p.ad > 1)
		throw PreconditionError("densities out of range");
	const std::uint64_t n = p.n;
	const std::uint64_t per_symbol = round_half_up(static_cast<double>(n) * p.td);
	const std::uint64_t leaves = round_half_up(static_cast<double>(n) * p.ad);
	if (per_symbol > n * n * n)
		throw PreconditionError("round(n*td) = " + std::to_string(per_symbol) + " exceeds the n^3 distinct transitions");
	if (leaves > n)
		throw PreconditionError("round(n*ad) exceeds n");
	if (p.roots > n)
		throw PreconditionError("more roots than states");

	std::mt19937_64 rng(p.seed);
	RankedAlphabet sigma;
	for (unsigned i = 0; i < p.s; ++i)
		sigma.add("a" + std::to_string(i), 2);
	const SymbolId leaf = sigma.add("c", 0);

	std::vector<std::string> names;
	for (unsigned i = 0; i < p.n; ++i)
		names.push_back("q" + std::to_string(i));

	std::vector<Transition> delta;
	for (SymbolId a = 0; a < p.s; ++a) {
		for (auto code : sample_distinct(rng, n * n * n, per_symbol)) {
			auto src = static_cast<StateId>(code / (n * n) + 1);
			auto c1 = static_cast<StateId>((code / n) % n + 1);
			auto c2 = static_cast<StateId>(code % n + 1);
			delta.push_back(Transition{src, a, {c1, c2}});
		}
	}
	for (auto q : sample_distinct(rng, n, leaves))
		delta.push_back(Transition{static_cast<StateId>(q + 1), leaf, {kFinalState}});

	std::vector<StateId> initial;
	for (auto q : sample_distinct(rng, n, p.roots))
		initial.push_back(static_cast<StateId>(q + 1));

	return TreeAutomaton::create(std::move(sigma), std::move(names), std::move(initial), std::move(delta), "tv");
}

Method parse_method(std::string_view text)
{
	Method m;
	m.name = std::string(text);
	if (text == "ru" || text == "ruq" || text == "ruqp") {
		m.baseline = m.name;
		return m;
	}
	unsigned x = 0, y = 0;
	char tail = 0;
	if (std::sscanf(m.name.c_str(), "heavy:%u:%u%c", &x, &y, &tail) == 2 && x >= 1 && y >= 1) {
		m.kind = Method::Kind::Heavy;
		m.x = x;
		m.y = y;
		return m;
	}
	throw PreconditionError("unknown method '" + m.name + "' (expected ru, ruq, ruqp or heavy:X:Y)");
}

TreeAutomaton apply_method(const TreeAutomaton& aut, const Method& m)
{
	if (m.kind == Method::Kind::Heavy)
		return heavy(aut, m.x, m.y);
	return baseline(aut, parse_baseline(m.baseline));
}

std::vector<double> parse_grid(std::string_view text)
{
	if (text.substr(0, 3) != "td=")
		throw PreconditionError("grid must look like td=FROM:TO:STEP");
	std::string body(text.substr(3));
	double from = 0, to = 0, step = 0;
	char tail = 0;
	int got = std::sscanf(body.c_str(), "%lf:%lf:%lf%c", &from, &to, &step, &tail);
	if (got == 1)
		return {from};
	if (got != 3 || step <= 0 || to < from)
		throw PreconditionError("grid must look like td=FROM:TO:STEP");
	std::vector<double> out;
	for (std::size_t i = 0;; ++i) {
		double v = from + static_cast<double>(i) * step;
		if (v > to + step * 1e-9)
			break;
		out.push_back(v);
	}
	return out;
}

std::vector<ExperimentRow> experiment(const ExperimentConfig& cfg)
{
	std::vector<Method> methods;
	for (const auto& m : cfg.methods)
		methods.push_back(parse_method(m));

	struct Result
	{
		std::size_t states = 0;
		std::size_t transitions = 0;
		double ms = 0;
	};
	const std::size_t points = cfg.td_values.size();
	const std::size_t per_point = static_cast<std::size_t>(cfg.samples) * methods.size();
	std::vector<Result> results(points * per_point);

	std::atomic<std::size_t> next{0};
	const std::size_t total_samples = points * cfg.samples;
	auto worker = [&] {
		while (true) {
			std::size_t task = next.fetch_add(1);
			if (task >= total_samples)
				return;
			const std::size_t point = task / cfg.samples;
			const std::size_t sample = task % cfg.samples;
			TvParams p = cfg.base;
			p.td = cfg.td_values[point];
			p.seed = stream_seed(cfg.seed, point, sample);
			TreeAutomaton aut = generate(p);
			for (std::size_t mi = 0; mi < methods.size(); ++mi) {
				auto start = std::chrono::steady_clock::now();
				TreeAutomaton out = apply_method(aut, methods[mi]);
				std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
				auto st = out.stats();
				results[point * per_point + mi * cfg.samples + sample] = Result{st.states, st.transitions, dt.count()};
			}
		}
	};

	unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
	std::vector<std::thread> pool;
	for (unsigned j = 1; j < jobs; ++j)
		pool.emplace_back(worker);
	worker();
	for (auto& t : pool)
		t.join();

	std::vector<ExperimentRow> rows;
	for (std::size_t point = 0; point < points; ++point) {
		for (std::size_t mi = 0; mi < methods.size(); ++mi) {
			ExperimentRow row{cfg.td_values[point], methods[mi].name, 0, 0, 0, cfg.samples};
			for (std::size_t sample = 0; sample < cfg.samples; ++sample) {
				const auto& r = results[point * per_point + mi * cfg.samples + sample];
				row.mean_states += static_cast<double>(r.states);
				row.mean_transitions += static_cast<double>(r.transitions);
				row.mean_ms += r.ms;
			}
			if (cfg.samples > 0) {
				row.mean_states /= cfg.samples;
				row.mean_transitions /= cfg.samples;
				row.mean_ms = cfg.timing ? row.mean_ms / cfg.samples : 0.0;
			}
			rows.push_back(std::move(row));
		}
	}
	return rows;
}

std::string to_csv(const std::vector<ExperimentRow>& rows)
{
	std::string out = "td,method,mean_states,mean_transitions,mean_ms,samples\n";
	char buf[256];
	for (const auto& r : rows) {
		std::snprintf(buf, sizeof buf, "%.2f,%s,%.4f,%.4f,%.3f,%u\n", r.td, r.method.c_str(), r.mean_states,
			r.mean_transitions, r.mean_ms, r.samples);
		out += buf;
	}
	return out;
}

} // namespace treereduce
