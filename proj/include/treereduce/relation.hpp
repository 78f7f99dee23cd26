#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "treereduce/automaton.hpp"

namespace treereduce {

using BitRow = boost::dynamic_bitset<>;

/**
 * @brief  Binary relation on states as a dense square bit matrix.
 *
 * Row i holds the set { j : i R j }.
 */
class Relation
{
public:
	Relation() = default;
	explicit Relation(std::size_t n) : rows_(n, BitRow(n)) { }

	static Relation identity(std::size_t n);
	static Relation full(std::size_t n);

	std::size_t size() const { return rows_.size(); }

	bool test(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
	void set(std::size_t i, std::size_t j, bool value = true) { rows_[i].set(j, value); }
	void reset(std::size_t i, std::size_t j) { rows_[i].reset(j); }

	const BitRow& row(std::size_t i) const { return rows_[i]; }
	BitRow& row(std::size_t i) { return rows_[i]; }

	/// Column j, i.e. { i : i R j }.
	BitRow column(std::size_t j) const;

	Relation transpose() const;
	Relation operator&(const Relation& other) const;
	Relation operator|(const Relation& other) const;
	bool subset_of(const Relation& other) const;

	bool is_reflexive() const;
	bool is_irreflexive() const;
	bool is_transitive() const;
	bool is_preorder() const { return is_reflexive() && is_transitive(); }
	bool is_symmetric() const;
	bool is_equivalence() const { return is_preorder() && is_symmetric(); }

	std::size_t pair_count() const;

	/// Pairs (i,j) with i != j, in row-major order.
	std::vector<std::pair<std::size_t, std::size_t>> nontrivial_pairs() const;

	bool operator==(const Relation& other) const = default;

private:
	std::vector<BitRow> rows_;
};

/// Smallest transitive superset (Warshall over bit rows).
Relation transitive_closure(const Relation& r);

/// R \ R^-1. Requires a transitive R (throws PreconditionError otherwise);
/// the result is irreflexive and transitive.
Relation strict_part(const Relation& r);

/// R ∩ R^-1. Requires a preorder (throws PreconditionError otherwise).
Relation equivalence_kernel(const Relation& r);

/// Classes of an equivalence, each sorted, ordered by least member.
std::vector<std::vector<StateId>> equivalence_classes(const Relation& equiv);

/// ∀i. u_i R v_i. Throws PreconditionError on a length mismatch.
bool lift_nonstrict(const Relation& r, const std::vector<StateId>& u, const std::vector<StateId>& v);

/// ∀i. u_i R v_i and ∃i. u_i R v_i with not v_i R u_i.
/// @p r is the preorder; its strict part is read off pairwise.
bool lift_strict(const Relation& r, const std::vector<StateId>& u, const std::vector<StateId>& v);

/// One "p <= q" line per pair using state names, sorted. Pairs touching psi are omitted.
std::string dump_relation(const Relation& r, const TreeAutomaton& aut);

} // namespace treereduce
