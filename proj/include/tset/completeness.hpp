#pragma once

#include "tset/relation.hpp"

namespace tset {

/// X is an upper cone and every ub({x,y}) is empty or an upper cone.
bool is_bounded_complete(const FiniteTSet& tset);

/// Every directed subset has a nonempty set of suprema. Scans all 2^n - 1
/// nonempty subsets.
bool is_domain(const FiniteTSet& tset);

bool is_bounded_complete_domain(const FiniteTSet& tset);

/// X is an upper cone and every ub({x,y}) is an upper cone (never empty).
bool is_finitely_complete(const FiniteTSet& tset);

bool is_complete_domain(const FiniteTSet& tset);

/// X is finitary and every ub({x,y}) is finitary.
bool is_finitarily_complete(const FiniteTSet& tset);

}  // namespace tset
