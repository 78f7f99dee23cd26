#pragma once

#include "treereduce/automaton.hpp"
#include "treereduce/relation.hpp"

namespace treereduce {

/**
 * Maximal downward simulation. Starts from { (q,r) : q = psi => r = psi } and
 * deletes pairs until every transition of q is matched by a same-symbol
 * transition of r with pairwise related children. Always a preorder.
 */
Relation downward_simulation(const TreeAutomaton& aut);

/**
 * Maximal upward simulation induced by @p inducing. The inducing relation is
 * closed transitively first. Initial pairs satisfy the psi and initial-state
 * clauses; a pair (q,r) survives while every parent occurrence of q at child
 * position i is matched by one of r at position i whose source is related
 * and whose side children are inducing-related to those of q's transition.
 */
Relation upward_simulation(const TreeAutomaton& aut, const Relation& inducing);

/**
 * D ⊕ U^-1: x W y iff some z has x D z and y U z, and for every z with
 * y D z there is an m with x D m and z U m.
 */
Relation combined_preorder(const TreeAutomaton& aut, const Relation& down, const Relation& up);

} // namespace treereduce
