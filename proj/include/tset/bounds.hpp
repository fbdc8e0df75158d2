#pragma once

#include "tset/relation.hpp"
#include "tset/subset.hpp"

// Bound, closure and structural subset operators on a t-set.
//
// Every function takes the subset by value and throws Errc::carrier_mismatch
// when its carrier size differs from the t-set's. None of them assume
// reflexivity: x ∈ le(A), x ∈ ↑x and upper-cone apexes all require x ≼ x.

namespace tset {

enum class BoundDirection { upper, lower };
enum class ExtremeDirection { least, largest };
enum class LimitDirection { sup, inf };
enum class ClosureDirection { up, down };

/// ub(A) = {x : ∀y∈A, y ≼ x} or lb(A) = {x : ∀y∈A, x ≼ y}. ub(∅) = X.
Subset bounds(const FiniteTSet& tset, Subset subset, BoundDirection direction);
/// le(A) = {x∈A : ∀y∈A, x ≼ y} or la(A) = {x∈A : ∀y∈A, y ≼ x}.
Subset extremes(const FiniteTSet& tset, Subset subset, ExtremeDirection direction);
/// sup(A) = le(ub(A)) or inf(A) = la(lb(A)); a set, possibly empty or plural.
Subset sup_inf(const FiniteTSet& tset, Subset subset, LimitDirection direction);
/// ↑(A) = {x : ∃y∈A, y ≼ x} or ↓(A) = {x : ∃y∈A, x ≼ y}.
Subset closure(const FiniteTSet& tset, Subset subset, ClosureDirection direction);

inline Subset ub(const FiniteTSet& t, Subset a) { return bounds(t, a, BoundDirection::upper); }
inline Subset lb(const FiniteTSet& t, Subset a) { return bounds(t, a, BoundDirection::lower); }
inline Subset le(const FiniteTSet& t, Subset a) { return extremes(t, a, ExtremeDirection::least); }
inline Subset la(const FiniteTSet& t, Subset a) { return extremes(t, a, ExtremeDirection::largest); }
inline Subset sup(const FiniteTSet& t, Subset a) { return sup_inf(t, a, LimitDirection::sup); }
inline Subset inf(const FiniteTSet& t, Subset a) { return sup_inf(t, a, LimitDirection::inf); }
inline Subset up(const FiniteTSet& t, Subset a) { return closure(t, a, ClosureDirection::up); }
inline Subset down(const FiniteTSet& t, Subset a) { return closure(t, a, ClosureDirection::down); }

/// ub({x, y}); x == y is allowed and gives ↑x.
Subset pair_upper_bounds(const FiniteTSet& tset, std::size_t x, std::size_t y);

/// True iff A = ↑x for some x ∈ A.
bool is_upper_cone(const FiniteTSet& tset, Subset subset);

/// True iff A ≠ ∅ and every two distinct members have an upper bound in A.
bool is_directed(const FiniteTSet& tset, Subset subset);

/// True iff A ⊆ ↑(F) for some finite F ⊆ A. On a finite carrier this is
/// A ⊆ ↑(A): every member has a predecessor inside A.
bool is_finitary(const FiniteTSet& tset, Subset subset);

/// True iff ↑(A) ⊆ A.
bool is_upper_set(const FiniteTSet& tset, Subset subset);

}  // namespace tset
