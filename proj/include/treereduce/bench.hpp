#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "treereduce/automaton.hpp"

namespace treereduce {

/**
 * @brief  Tabakov-Vardi parameters for tree automata.
 *
 * round(n*td) distinct transitions per rank-2 symbol, round(n*ad) distinct
 * leaf rules over a single rank-0 symbol, and @p roots initial states.
 * Rounding is half up.
 */
struct TvParams
{
	unsigned n = 10;
	unsigned s = 2;
	double td = 2.0;
	double ad = 0.8;
	std::uint64_t seed = 0;
	unsigned roots = 1;
};

/// Deterministic in all parameters. States are q0..q{n-1}, rank-2 symbols
/// a0..a{s-1}, the leaf symbol is c. Throws PreconditionError when the
/// requested counts exceed what n states can hold.
TreeAutomaton generate(const TvParams& p);

/// Independent stream seed for one sample of one grid point.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t point, std::uint64_t sample);

/// Reduction method by name: ru, ruq, ruqp, heavy:X:Y.
struct Method
{
	std::string name;
	enum class Kind { Baseline, Heavy } kind = Kind::Baseline;
	std::string baseline;
	unsigned x = 1;
	unsigned y = 1;
};

Method parse_method(std::string_view text);
TreeAutomaton apply_method(const TreeAutomaton& aut, const Method& m);

/// "td=1.0:6.0:0.5" -> 1.0, 1.5, ..., 6.0. A single value "td=2" is allowed.
std::vector<double> parse_grid(std::string_view text);

struct ExperimentConfig
{
	std::vector<double> td_values;
	TvParams base;                      ///< td and seed are overridden per sample
	std::vector<std::string> methods;
	unsigned samples = 1;
	std::uint64_t seed = 0;
	unsigned jobs = 0;                  ///< 0 = hardware concurrency
	bool timing = true;                 ///< false writes 0 for mean_ms
};

struct ExperimentRow
{
	double td = 0;
	std::string method;
	double mean_states = 0;
	double mean_transitions = 0;
	double mean_ms = 0;
	unsigned samples = 0;
};

/// Every sample automaton is reduced by every method. Results do not depend
/// on the number of worker threads (wall time aside).
std::vector<ExperimentRow> experiment(const ExperimentConfig& cfg);

/// Header "td,method,mean_states,mean_transitions,mean_ms,samples".
std::string to_csv(const std::vector<ExperimentRow>& rows);

} // namespace treereduce
