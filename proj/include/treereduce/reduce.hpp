#pragma once

#include <string>
#include <vector>

#include "treereduce/automaton.hpp"
#include "treereduce/catalog.hpp"
#include "treereduce/relation.hpp"

namespace treereduce {

/// Computes the relation a spec names on @p aut. Lookahead families are
/// transitively closed; strict specs yield the strict part of the closed relation.
Relation evaluate(const TreeAutomaton& aut, const RelationSpec& spec);

/**
 * @brief  Strict partial order over transition ids of one automaton.
 *
 * (t, t') means t' dominates t, so t may be pruned.
 */
struct PruneOrder
{
	Relation pairs;

	std::size_t size() const { return pairs.pair_count(); }
};

enum class TupleLift { NonStrict, Strict };

/**
 * P(u, d) over the transitions of @p aut: same symbol, sources related by @p u,
 * children related by the chosen lifting of @p d. For TupleLift::Strict,
 * @p d is the preorder whose strict part is lifted. Throws Error if the
 * result is not a strict partial order.
 */
PruneOrder prune_order(const TreeAutomaton& aut, const Relation& u, const Relation& d, TupleLift lift);

/**
 * Evaluates both specs on @p aut and builds P(u, d). The lifting is strict
 * when d is strict. Unless @p force is set, gfp_allowed(u, d) must say yes.
 * Throws CatalogError when both sides are nonstrict or the catalog refuses.
 */
PruneOrder build_prune_order(const TreeAutomaton& aut, const RelationSpec& u, const RelationSpec& d, bool force = false);

/// Drops every transition dominated by another one in @p order.
TreeAutomaton prune(const TreeAutomaton& aut, const PruneOrder& order);

/**
 * One state per class of @p equiv, named after its least member. Classes
 * with more than one member are recorded as comment lines.
 * Throws PreconditionError unless @p equiv is an equivalence keeping psi alone.
 */
TreeAutomaton quotient(const TreeAutomaton& aut, const Relation& equiv);

struct PassRecord
{
	std::string pass;
	std::size_t states_before = 0;
	std::size_t states_after = 0;
	std::size_t transitions_before = 0;
	std::size_t transitions_after = 0;
	double millis = 0.0;
};

struct ReductionReport
{
	std::string method;
	AutomatonStats input;
	AutomatonStats output;
	bool sound = true;
	std::vector<PassRecord> passes;
	unsigned iterations = 0;
};

/// Op(x, y): the fixed sequence of removals, quotients and prunings.
TreeAutomaton op_xy(const TreeAutomaton& aut, unsigned x, unsigned y, ReductionReport* report = nullptr);

/// Heavy(1,1) iterates Op(1,1); Heavy(x,y) iterates Heavy(1,1) followed by
/// Op(x,y). Both stop once the state and transition counts stay put.
TreeAutomaton heavy(const TreeAutomaton& aut, unsigned x, unsigned y, ReductionReport* report = nullptr);

enum class Baseline { RU, RUQ, RUQP };

Baseline parse_baseline(std::string_view name);
std::string to_string(Baseline b);

TreeAutomaton baseline(const TreeAutomaton& aut, Baseline method, ReductionReport* report = nullptr);

/// Prunes with P(u, d) regardless of the catalog. The result is flagged
/// unsound in @p report and carries a comment line saying so.
TreeAutomaton force_prune(const TreeAutomaton& aut, const RelationSpec& u, const RelationSpec& d,
	ReductionReport* report = nullptr);

} // namespace treereduce
