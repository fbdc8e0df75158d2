#include "tset/bounds.hpp"

namespace tset {

Subset bounds(const FiniteTSet& tset, Subset subset, BoundDirection direction) {
  require_same_carrier(tset.size(), subset.carrier_size());
  Subset result = tset.carrier();
  for (std::size_t y : subset.members()) {
    result = result & (direction == BoundDirection::upper ? tset.successors(y)
                                                          : tset.predecessors(y));
  }
  return result;
}

Subset extremes(const FiniteTSet& tset, Subset subset, ExtremeDirection direction) {
  require_same_carrier(tset.size(), subset.carrier_size());
  Subset result = Subset::empty(tset.size());
  for (std::size_t x : subset.members()) {
    const Subset reach = direction == ExtremeDirection::least ? tset.successors(x)
                                                              : tset.predecessors(x);
    if (subset.is_subset_of(reach)) result = result.with(x);
  }
  return result;
}

Subset sup_inf(const FiniteTSet& tset, Subset subset, LimitDirection direction) {
  if (direction == LimitDirection::sup) {
    return extremes(tset, bounds(tset, subset, BoundDirection::upper),
                    ExtremeDirection::least);
  }
  return extremes(tset, bounds(tset, subset, BoundDirection::lower),
                  ExtremeDirection::largest);
}

Subset closure(const FiniteTSet& tset, Subset subset, ClosureDirection direction) {
  require_same_carrier(tset.size(), subset.carrier_size());
  Subset result = Subset::empty(tset.size());
  for (std::size_t y : subset.members()) {
    result = result | (direction == ClosureDirection::up ? tset.successors(y)
                                                         : tset.predecessors(y));
  }
  return result;
}

Subset pair_upper_bounds(const FiniteTSet& tset, std::size_t x, std::size_t y) {
  return tset.successors(x) & tset.successors(y);
}

bool is_upper_cone(const FiniteTSet& tset, Subset subset) {
  require_same_carrier(tset.size(), subset.carrier_size());
  for (std::size_t apex : subset.members()) {
    if (tset.successors(apex) == subset) return true;
  }
  return false;
}

bool is_directed(const FiniteTSet& tset, Subset subset) {
  require_same_carrier(tset.size(), subset.carrier_size());
  if (subset.is_empty()) return false;
  for (std::size_t x : subset.members()) {
    for (std::size_t y : subset.members()) {
      if (y <= x) continue;
      if ((subset & pair_upper_bounds(tset, x, y)).is_empty()) return false;
    }
  }
  return true;
}

bool is_finitary(const FiniteTSet& tset, Subset subset) {
  return subset.is_subset_of(up(tset, subset));
}

bool is_upper_set(const FiniteTSet& tset, Subset subset) {
  return up(tset, subset).is_subset_of(subset);
}

}  // namespace tset
