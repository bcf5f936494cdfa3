#pragma once

#include <string_view>

#include "scalc/expr.hpp"
#include "scalc/pred_set.hpp"
#include "scalc/relation.hpp"
#include "scalc/state_space.hpp"
#include "scalc/syntax.hpp"

namespace scalc {

/// Identity relation.
Relation denote_nop(std::size_t size);
inline Relation denote_nop(const StateSpace& space) { return denote_nop(space.size()); }

/// Pairs (x, y) where y is x with `var` set to e evaluated in x. States
/// where e overflows or leaves the domain of `var` get no successor.
Relation denote_assign(std::string_view var, const ArithExpr& e, const StateSpace& space);

/// Pairs (x, y) where y agrees with x everywhere except `var`, which takes
/// every value of its domain.
Relation denote_decl(std::string_view var, const StateSpace& space);

/// (guard ∧ r1) ∪ (¬guard ∧ r2), restricted on the initial state.
Relation denote_ite(const PredSet& guard, const Relation& r1, const Relation& r2);
Relation denote_if(const PredSet& guard, const Relation& r);

/// Relational composition: (x, y) iff some z has (x, z) ∈ r1 and (z, y) ∈ r2.
Relation denote_seq(const Relation& r1, const Relation& r2);

/// Loop relation. (x, x) when the guard fails at x; otherwise (x, y) for
/// every y reachable from x through a body chain whose intermediate states
/// all satisfy the guard and where y does not. Computed by forward
/// reachability, so it terminates on every finite space.
Relation denote_while(const PredSet& guard, const Relation& body);

/// Structural recursion over the statement.
Relation denote(const Stmt& s, const StateSpace& space);

}  // namespace scalc
