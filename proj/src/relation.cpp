#include "treereduce/relation.hpp"

#include <algorithm>

#include "treereduce/error.hpp"

namespace treereduce {

Relation Relation::identity(std::size_t n)
{
	Relation r(n);
	for (std::size_t i = 0; i < n; ++i)
		r.set(i, i);
	return r;
}

Relation Relation::full(std::size_t n)
{
	Relation r(n);
	for (auto& row : r.rows_)
		row.set();
	return r;
}

BitRow Relation::column(std::size_t j) const
{
	BitRow col(size());
	for (std::size_t i = 0; i < size(); ++i) {
		if (rows_[i].test(j))
			col.set(i);
	}
	return col;
}

Relation Relation::transpose() const
{
	Relation t(size());
	for (std::size_t i = 0; i < size(); ++i) {
		for (auto j = rows_[i].find_first(); j != BitRow::npos; j = rows_[i].find_next(j))
			t.set(j, i);
	}
	return t;
}

Relation Relation::operator&(const Relation& other) const
{
	if (size() != other.size())
		throw PreconditionError("relation dimension mismatch");
	Relation out = *this;
	for (std::size_t i = 0; i < size(); ++i)
		out.rows_[i] &= other.rows_[i];
	return out;
}

Relation Relation::operator|(const Relation& other) const
{
	if (size() != other.size())
		throw PreconditionError("relation dimension mismatch");
	Relation out = *this;
	for (std::size_t i = 0; i < size(); ++i)
		out.rows_[i] |= other.rows_[i];
	return out;
}

bool Relation::subset_of(const Relation& other) const
{
	if (size() != other.size())
		return false;
	for (std::size_t i = 0; i < size(); ++i) {
		if (!rows_[i].is_subset_of(other.rows_[i]))
			return false;
	}
	return true;
}

bool Relation::is_reflexive() const
{
	for (std::size_t i = 0; i < size(); ++i) {
		if (!rows_[i].test(i))
			return false;
	}
	return true;
}

bool Relation::is_irreflexive() const
{
	for (std::size_t i = 0; i < size(); ++i) {
		if (rows_[i].test(i))
			return false;
	}
	return true;
}

bool Relation::is_transitive() const
{
	// i R j implies row(j) ⊆ row(i)
	for (std::size_t i = 0; i < size(); ++i) {
		for (auto j = rows_[i].find_first(); j != BitRow::npos; j = rows_[i].find_next(j)) {
			if (!rows_[j].is_subset_of(rows_[i]))
				return false;
		}
	}
	return true;
}

bool Relation::is_symmetric() const
{
	return *this == transpose();
}

std::size_t Relation::pair_count() const
{
	std::size_t c = 0;
	for (const auto& row : rows_)
		c += row.count();
	return c;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::nontrivial_pairs() const
{
	std::vector<std::pair<std::size_t, std::size_t>> out;
	for (std::size_t i = 0; i < size(); ++i) {
		for (auto j = rows_[i].find_first(); j != BitRow::npos; j = rows_[i].find_next(j)) {
			if (i != j)
				out.emplace_back(i, j);
		}
	}
	return out;
}

Relation transitive_closure(const Relation& r)
{
	Relation c = r;
	const auto n = c.size();
	for (std::size_t k = 0; k < n; ++k) {
		const BitRow via = c.row(k);
		for (std::size_t i = 0; i < n; ++i) {
			if (c.test(i, k))
				c.row(i) |= via;
		}
	}
	return c;
}

Relation strict_part(const Relation& r)
{
	if (!r.is_transitive())
		throw PreconditionError("strict part requested for a non-transitive relation");
	Relation t = r.transpose();
	Relation s(r.size());
	for (std::size_t i = 0; i < r.size(); ++i)
		s.row(i) = r.row(i) - t.row(i);
	return s;
}

Relation equivalence_kernel(const Relation& r)
{
	if (!r.is_preorder())
		throw PreconditionError("equivalence kernel requested for a non-preorder");
	return r & r.transpose();
}

std::vector<std::vector<StateId>> equivalence_classes(const Relation& equiv)
{
	if (!equiv.is_equivalence())
		throw PreconditionError("not an equivalence relation");
	std::vector<std::vector<StateId>> out;
	std::vector<bool> done(equiv.size(), false);
	for (std::size_t i = 0; i < equiv.size(); ++i) {
		if (done[i])
			continue;
		std::vector<StateId> cls;
		const auto& row = equiv.row(i);
		for (auto j = row.find_first(); j != BitRow::npos; j = row.find_next(j)) {
			cls.push_back(static_cast<StateId>(j));
			done[j] = true;
		}
		out.push_back(std::move(cls));
	}
	return out;
}

bool lift_nonstrict(const Relation& r, const std::vector<StateId>& u, const std::vector<StateId>& v)
{
	if (u.size() != v.size())
		throw PreconditionError("tuple length mismatch");
	for (std::size_t i = 0; i < u.size(); ++i) {
		if (!r.test(u[i], v[i]))
			return false;
	}
	return true;
}

bool lift_strict(const Relation& r, const std::vector<StateId>& u, const std::vector<StateId>& v)
{
	if (u.size() != v.size())
		throw PreconditionError("tuple length mismatch");
	bool strict = false;
	for (std::size_t i = 0; i < u.size(); ++i) {
		if (!r.test(u[i], v[i]))
			return false;
		if (!r.test(v[i], u[i]))
			strict = true;
	}
	return strict;
}

std::string dump_relation(const Relation& r, const TreeAutomaton& aut)
{
	std::vector<std::string> lines;
	for (std::size_t i = 1; i < r.size(); ++i) {
		const auto& row = r.row(i);
		for (auto j = row.find_first(); j != BitRow::npos; j = row.find_next(j)) {
			if (j == kFinalState)
				continue;
			lines.push_back(aut.state_name(static_cast<StateId>(i)) + " <= " +
				aut.state_name(static_cast<StateId>(j)));
		}
	}
	std::sort(lines.begin(), lines.end());
	std::string out;
	for (const auto& l : lines)
		out += l + '\n';
	return out;
}

} // namespace treereduce
